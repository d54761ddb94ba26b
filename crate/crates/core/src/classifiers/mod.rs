//! Linear classifiers operating in the tangent space of a reference point.

pub mod metrics;
pub mod ovr;
pub mod perceptron;
pub mod platt;
pub mod second_order;
pub mod svm;

use crate::error::Result;
use crate::geometry::{decision_score, Hyperplane, PoincarePoint};
use crate::scalar::Float;

pub use metrics::{accuracy, per_class_metrics, ClassMetrics};
pub use ovr::{ovr_predict, ovr_train, ClassEntry, MultiClassModel, OvrBase};
pub use perceptron::{
    check_margin_assumption, perceptron_bound, perceptron_train, MarginReport, PerceptronModel,
};
pub use platt::{platt_fit, PlattParams};
pub use second_order::{second_order_bound, second_order_train, SecondOrderModel, SecondOrderState};
pub use svm::{euclidean_svm_train, svm_train, SvmConfig, SvmModel};

/// Raw score and sign of a hyperplane decision: (sign, <log_p(x), w>).
pub fn predict_binary<F: Float>(h: &Hyperplane<F>, x: &PoincarePoint<F>) -> Result<(i32, F)> {
    let score = decision_score(x, h)?;
    let sign = if score > F::zero() {
        1
    } else if score < F::zero() {
        -1
    } else {
        0
    };
    Ok((sign, score))
}
