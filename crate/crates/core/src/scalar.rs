//! Scalar abstraction so every numeric routine works with either `f32` or `f64`.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::str::FromStr;

use num_traits::{FromPrimitive, NumAssign, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Floating-point scalar used throughout the crate.
///
/// Implemented for `f32` and `f64`; all geometry and training code is generic
/// over this trait.
pub trait Float:
    num_traits::Float
    + FromPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + FromStr
    + Default
    + Serialize
    + DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Margin kept between computed point norms and the unit sphere, so that
    /// `atanh` and conformal factors stay finite.
    fn boundary_eps() -> Self;

    /// Lossy conversion from any primitive number; panics only if the value is
    /// not representable at all (e.g. NaN from a failed conversion).
    fn cast<T: ToPrimitive>(t: T) -> Self {
        Self::from_f64(t.to_f64().expect("numeric cast")).expect("numeric cast")
    }
}

/// True when `x` compares strictly greater than zero; false for NaN.
pub(crate) fn strictly_positive<F: Float>(x: F) -> bool {
    x.partial_cmp(&F::zero()) == Some(Ordering::Greater)
}

/// True when `x` compares greater than or equal to zero; false for NaN.
pub(crate) fn non_negative<F: Float>(x: F) -> bool {
    matches!(
        x.partial_cmp(&F::zero()),
        Some(Ordering::Greater | Ordering::Equal)
    )
}

impl Float for f64 {
    fn boundary_eps() -> Self {
        1e-15
    }
}

impl Float for f32 {
    fn boundary_eps() -> Self {
        1e-6
    }
}
