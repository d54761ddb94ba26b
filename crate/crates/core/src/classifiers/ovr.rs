//! One-vs-rest multi-class training with per-class reference points and
//! probability calibration.

use serde::{Deserialize, Serialize};

use crate::classifiers::perceptron::perceptron_train;
use crate::classifiers::platt::{platt_fit, PlattParams};
use crate::classifiers::svm::{svm_train, SvmConfig};
use crate::dataset::LabeledDataset;
use crate::error::{Error, Result};
use crate::geometry::{decision_score, Hyperplane, PoincarePoint};
use crate::hull::learn_reference_point;
use crate::scalar::Float;

/// Base binary learner used for each class-vs-rest task.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound = "")]
pub enum OvrBase<F: Float> {
    /// Soft-margin SVM; each class trains with `seed + class index`.
    Svm(SvmConfig<F>),
    /// Online perceptron with an epoch budget.
    Perceptron { max_epochs: usize },
}

impl<F: Float> OvrBase<F> {
    pub fn algorithm_name(&self) -> &'static str {
        match self {
            OvrBase::Svm(_) => "svm",
            OvrBase::Perceptron { .. } => "perceptron",
        }
    }
}

/// One trained class-vs-rest classifier with its calibration.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct ClassEntry<F: Float> {
    class_id: i32,
    hyperplane: Hyperplane<F>,
    platt: PlattParams<F>,
    iterations: u64,
    converged: bool,
}

impl<F: Float> ClassEntry<F> {
    pub fn new(class_id: i32, hyperplane: Hyperplane<F>, platt: PlattParams<F>) -> Self {
        ClassEntry { class_id, hyperplane, platt, iterations: 0, converged: true }
    }

    pub fn class_id(&self) -> i32 {
        self.class_id
    }

    pub fn hyperplane(&self) -> &Hyperplane<F> {
        &self.hyperplane
    }

    pub fn platt(&self) -> &PlattParams<F> {
        &self.platt
    }

    pub fn iterations(&self) -> u64 {
        self.iterations
    }

    pub fn converged(&self) -> bool {
        self.converged
    }

    /// Calibrated P(class | x).
    pub fn probability(&self, x: &PoincarePoint<F>) -> Result<F> {
        Ok(self.platt.probability(decision_score(x, &self.hyperplane)?))
    }
}

/// Independently trained binary classifiers, one per class id.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct MultiClassModel<F: Float> {
    entries: Vec<ClassEntry<F>>,
    dimension: usize,
    algorithm: String,
}

impl<F: Float> MultiClassModel<F> {
    /// Assembles a model from per-class entries (ascending unique class ids,
    /// consistent dimensions).
    pub fn from_entries(entries: Vec<ClassEntry<F>>, algorithm: String) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidArgument("need at least two classes".into()));
        }
        let dimension = entries[0].hyperplane.dim();
        for pair in entries.windows(2) {
            if pair[0].class_id >= pair[1].class_id {
                return Err(Error::InvalidArgument(
                    "class ids must be strictly ascending".into(),
                ));
            }
        }
        if let Some(e) = entries.iter().find(|e| e.hyperplane.dim() != dimension) {
            return Err(Error::DimensionMismatch { expected: dimension, got: e.hyperplane.dim() });
        }
        Ok(MultiClassModel { entries, dimension, algorithm })
    }

    pub fn entries(&self) -> &[ClassEntry<F>] {
        &self.entries
    }

    pub fn num_classes(&self) -> usize {
        self.entries.len()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn algorithm(&self) -> &str {
        &self.algorithm
    }

    pub fn class_ids(&self) -> Vec<i32> {
        self.entries.iter().map(|e| e.class_id).collect()
    }
}

/// Trains one binary classifier per class: relabel class-vs-rest, learn a
/// reference point from the class hulls, train the base learner, then fit
/// the calibration sigmoid on the training scores.
pub fn ovr_train<F: Float>(
    ds: &LabeledDataset<F>,
    base: &OvrBase<F>,
) -> Result<MultiClassModel<F>> {
    let ids = ds.class_ids();
    if ids.len() < 2 {
        return Err(Error::InvalidArgument(
            "one-vs-rest needs at least two classes".into(),
        ));
    }
    let mut entries = Vec::with_capacity(ids.len());
    for (j, k) in ids.iter().enumerate() {
        let rel = ds.relabel_one_vs_rest(*k);
        let p = learn_reference_point(&rel)?;
        let (hyperplane, iterations, converged) = match base {
            OvrBase::Svm(cfg) => {
                let class_cfg = SvmConfig { seed: cfg.seed.wrapping_add(j as u64), ..cfg.clone() };
                let model = svm_train(&rel, &p, &class_cfg)?;
                (model.hyperplane().clone(), model.iterations(), model.converged())
            }
            OvrBase::Perceptron { max_epochs } => {
                let model = perceptron_train(&rel, &p, *max_epochs)?;
                (model.hyperplane().clone(), model.updates() as u64, model.converged())
            }
        };
        let scores: Vec<F> = rel
            .points()
            .iter()
            .map(|x| decision_score(x, &hyperplane))
            .collect::<Result<_>>()?;
        let platt = platt_fit(&scores, rel.labels())?;
        entries.push(ClassEntry { class_id: *k, hyperplane, platt, iterations, converged });
    }
    MultiClassModel::from_entries(entries, base.algorithm_name().to_string())
}

/// Maximum-probability prediction; ties go to the smallest class id. Returns
/// the winning id and the per-class probability vector in class-id order.
pub fn ovr_predict<F: Float>(
    model: &MultiClassModel<F>,
    x: &PoincarePoint<F>,
) -> Result<(i32, Vec<F>)> {
    if x.dim() != model.dimension {
        return Err(Error::DimensionMismatch { expected: model.dimension, got: x.dim() });
    }
    let mut probs = Vec::with_capacity(model.entries.len());
    let mut best = model.entries[0].class_id;
    let mut best_prob = F::neg_infinity();
    for entry in &model.entries {
        let prob = entry.probability(x)?;
        if prob > best_prob {
            best_prob = prob;
            best = entry.class_id;
        }
        probs.push(prob);
    }
    Ok((best, probs))
}
