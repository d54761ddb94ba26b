//! Online perceptron in the tangent space of a reference point, with the
//! margin-assumption checker and the closed-form mistake bound.

use serde::{Deserialize, Serialize};

use crate::dataset::LabeledDataset;
use crate::error::{Error, Result};
use crate::geometry::{
    accumulate, dist_to_hyperplane, tangent_features, Hyperplane, PoincarePoint,
};
use crate::linalg::dot;
use crate::scalar::{strictly_positive, Float};

/// Result of perceptron training.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct PerceptronModel<F: Float> {
    hyperplane: Hyperplane<F>,
    updates: usize,
    converged: bool,
}

impl<F: Float> PerceptronModel<F> {
    pub fn hyperplane(&self) -> &Hyperplane<F> {
        &self.hyperplane
    }

    /// Number of mistake-driven updates across all epochs.
    pub fn updates(&self) -> usize {
        self.updates
    }

    /// True when training ended with a full error-free pass.
    pub fn converged(&self) -> bool {
        self.converged
    }
}

/// Per-clause violation report from `check_margin_assumption`.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct MarginReport<F: Float> {
    /// Indices with y * <log_p(x), w> <= 0.
    pub sign_violations: Vec<usize>,
    /// Indices closer to the hyperplane than the required margin.
    pub margin_violations: Vec<usize>,
    /// Indices with point norm above the stated bound.
    pub norm_violations: Vec<usize>,
    /// Smallest observed distance to the hyperplane.
    pub min_distance: F,
}

impl<F: Float> MarginReport<F> {
    pub fn satisfied(&self) -> bool {
        self.sign_violations.is_empty()
            && self.margin_violations.is_empty()
            && self.norm_violations.is_empty()
    }
}

/// Checks that every point is correctly signed, at distance >= eps from the
/// hyperplane, and within norm R: the precondition of the mistake bounds.
pub fn check_margin_assumption<F: Float>(
    ds: &LabeledDataset<F>,
    h: &Hyperplane<F>,
    eps: F,
    r: F,
) -> Result<MarginReport<F>> {
    ds.require_binary()?;
    if !strictly_positive(eps) {
        return Err(Error::InvalidArgument("margin must be positive".into()));
    }
    if !(r > F::zero() && r < F::one()) {
        return Err(Error::InvalidArgument("norm bound must lie in (0, 1)".into()));
    }
    let feats = tangent_features(h.p(), ds.points());
    let mut report = MarginReport {
        min_distance: F::infinity(),
        ..MarginReport::default()
    };
    for (i, ((v, _), (x, y))) in feats.iter().zip(ds.iter()).enumerate() {
        let score = F::cast(y) * dot(v, h.normal().components());
        if !strictly_positive(score) {
            report.sign_violations.push(i);
        }
        let dist = dist_to_hyperplane(x, h)?;
        report.min_distance = report.min_distance.min(dist);
        if dist < eps {
            report.margin_violations.push(i);
        }
        if x.norm() > r {
            report.norm_violations.push(i);
        }
    }
    Ok(report)
}

/// Trains by cycling the dataset in index order, applying the weighted
/// tangent update on every mistake (score <= 0), until an error-free pass or
/// `max_epochs` passes.
pub fn perceptron_train<F: Float>(
    ds: &LabeledDataset<F>,
    p: &PoincarePoint<F>,
    max_epochs: usize,
) -> Result<PerceptronModel<F>> {
    ds.require_binary()?;
    if ds.dim() != p.dim() {
        return Err(Error::DimensionMismatch { expected: ds.dim(), got: p.dim() });
    }
    if max_epochs == 0 {
        return Err(Error::InvalidArgument("max_epochs must be at least 1".into()));
    }
    let feats = tangent_features(p, ds.points());
    let mut w = vec![F::zero(); ds.dim()];
    let mut updates = 0usize;
    let mut converged = false;
    for _ in 0..max_epochs {
        let mut clean = true;
        for ((v, eta), (_, y)) in feats.iter().zip(ds.iter()) {
            let yf = F::cast(y);
            if yf * dot(v, &w) <= F::zero() {
                accumulate(*eta * yf, v, &mut w);
                updates += 1;
                clean = false;
            }
        }
        if clean {
            converged = true;
            break;
        }
    }
    let hyperplane = Hyperplane::from_components(p.clone(), w)?;
    Ok(PerceptronModel { hyperplane, updates, converged })
}

/// Worst-case mistake count for a unit-margin-eps dataset with point norms
/// <= r seen from a reference point of norm p_norm:
/// (2 R_p / ((1 - R_p^2) sinh eps))^2 with R_p = (p_norm + r) / (1 + p_norm r).
pub fn perceptron_bound<F: Float>(p_norm: F, r: F, eps: F) -> Result<F> {
    if !(p_norm >= F::zero() && p_norm < F::one()) {
        return Err(Error::InvalidArgument("reference norm must lie in [0, 1)".into()));
    }
    if !(r > F::zero() && r < F::one()) {
        return Err(Error::InvalidArgument("norm bound must lie in (0, 1)".into()));
    }
    if !strictly_positive(eps) {
        return Err(Error::InvalidArgument("margin must be positive".into()));
    }
    let rp = (p_norm + r) / (F::one() + p_norm * r);
    let ratio = F::cast(2.0) * rp / ((F::one() - rp * rp) * eps.sinh());
    Ok(ratio * ratio)
}
