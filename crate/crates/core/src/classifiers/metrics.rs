//! Evaluation metrics for label predictions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Float;

/// Precision/recall for one class.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct ClassMetrics<F: Float> {
    pub class_id: i32,
    pub precision: F,
    pub recall: F,
    /// Number of true examples of this class.
    pub support: usize,
}

fn check_lengths(predicted: &[i32], actual: &[i32]) -> Result<()> {
    if predicted.is_empty() {
        return Err(Error::EmptyDataset);
    }
    if predicted.len() != actual.len() {
        return Err(Error::InvalidArgument(format!(
            "{} predictions but {} labels",
            predicted.len(),
            actual.len()
        )));
    }
    Ok(())
}

/// Fraction of matching predictions.
pub fn accuracy<F: Float>(predicted: &[i32], actual: &[i32]) -> Result<F> {
    check_lengths(predicted, actual)?;
    let hits = predicted.iter().zip(actual).filter(|(p, a)| p == a).count();
    Ok(F::cast(hits) / F::cast(predicted.len()))
}

/// Per-class precision and recall over the union of observed class ids.
/// Empty denominators yield zero rather than NaN.
pub fn per_class_metrics<F: Float>(predicted: &[i32], actual: &[i32]) -> Result<Vec<ClassMetrics<F>>> {
    check_lengths(predicted, actual)?;
    let mut ids: Vec<i32> = predicted.iter().chain(actual).copied().collect();
    ids.sort_unstable();
    ids.dedup();
    let mut out = Vec::with_capacity(ids.len());
    for id in ids {
        let tp = predicted
            .iter()
            .zip(actual)
            .filter(|(p, a)| **p == id && **a == id)
            .count();
        let pred_count = predicted.iter().filter(|p| **p == id).count();
        let support = actual.iter().filter(|a| **a == id).count();
        let precision = if pred_count == 0 {
            F::zero()
        } else {
            F::cast(tp) / F::cast(pred_count)
        };
        let recall = if support == 0 {
            F::zero()
        } else {
            F::cast(tp) / F::cast(support)
        };
        out.push(ClassMetrics { class_id: id, precision, recall, support });
    }
    Ok(out)
}
