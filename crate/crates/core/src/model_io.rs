//! Model serialization: one JSON document for binary and multi-class models.
//!
//! Schema: {dimension, algorithm, hyperparameters, training_stats,
//! classes: [{class_id, p, w, platt}]}. Floats round-trip exactly (shortest
//! decimal representation that parses back to the same bits).

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::classifiers::ovr::{ClassEntry, MultiClassModel};
use crate::classifiers::platt::PlattParams;
use crate::error::{Error, Result};
use crate::geometry::{Hyperplane, PoincarePoint};
use crate::scalar::Float;

/// One classifier: reference point, normal, optional calibration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct ClassRecord<F: Float> {
    pub class_id: i32,
    pub p: Vec<F>,
    pub w: Vec<F>,
    #[serde(default = "none_platt")]
    pub platt: Option<PlattParams<F>>,
}

fn none_platt<F: Float>() -> Option<PlattParams<F>> {
    None
}

/// Serializable model document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct ModelFile<F: Float> {
    pub dimension: usize,
    pub algorithm: String,
    pub hyperparameters: serde_json::Value,
    pub training_stats: serde_json::Value,
    pub classes: Vec<ClassRecord<F>>,
}

impl<F: Float> ModelFile<F> {
    /// Wraps a binary model (single hyperplane, class id +1).
    pub fn from_binary(
        algorithm: &str,
        hyperplane: &Hyperplane<F>,
        hyperparameters: serde_json::Value,
        training_stats: serde_json::Value,
    ) -> Self {
        ModelFile {
            dimension: hyperplane.dim(),
            algorithm: algorithm.to_string(),
            hyperparameters,
            training_stats,
            classes: vec![ClassRecord {
                class_id: 1,
                p: hyperplane.p().coords().to_vec(),
                w: hyperplane.normal().components().to_vec(),
                platt: None,
            }],
        }
    }

    /// Wraps a one-vs-rest model with its calibrations.
    pub fn from_multiclass(
        model: &MultiClassModel<F>,
        hyperparameters: serde_json::Value,
        training_stats: serde_json::Value,
    ) -> Self {
        ModelFile {
            dimension: model.dimension(),
            algorithm: model.algorithm().to_string(),
            hyperparameters,
            training_stats,
            classes: model
                .entries()
                .iter()
                .map(|e| ClassRecord {
                    class_id: e.class_id(),
                    p: e.hyperplane().p().coords().to_vec(),
                    w: e.hyperplane().normal().components().to_vec(),
                    platt: Some(*e.platt()),
                })
                .collect(),
        }
    }

    /// True when the document holds a single uncalibrated binary classifier.
    pub fn is_binary(&self) -> bool {
        self.classes.len() == 1
    }

    /// Rebuilds the hyperplane of class record `idx`, validating geometry.
    pub fn hyperplane(&self, idx: usize) -> Result<Hyperplane<F>> {
        let rec = self
            .classes
            .get(idx)
            .ok_or_else(|| Error::InvalidArgument(format!("no class record {idx}")))?;
        if rec.p.len() != self.dimension || rec.w.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: rec.p.len().max(rec.w.len()),
            });
        }
        let p = PoincarePoint::new(rec.p.clone())?;
        Hyperplane::from_components(p, rec.w.clone())
    }

    /// Rebuilds a multi-class model; every record needs a calibration.
    pub fn to_multiclass(&self) -> Result<MultiClassModel<F>> {
        let mut entries = Vec::with_capacity(self.classes.len());
        for (i, rec) in self.classes.iter().enumerate() {
            let platt = rec.platt.ok_or_else(|| {
                Error::InvalidArgument(format!("class {} has no calibration", rec.class_id))
            })?;
            entries.push(ClassEntry::new(rec.class_id, self.hyperplane(i)?, platt));
        }
        MultiClassModel::from_entries(entries, self.algorithm.clone())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let file = File::create(path)?;
        let mut writer = BufWriter::new(file);
        serde_json::to_writer_pretty(&mut writer, self)?;
        writer.write_all(b"\n")?;
        writer.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let file = File::open(path)?;
        let model: ModelFile<F> = serde_json::from_reader(BufReader::new(file))?;
        for (i, _) in model.classes.iter().enumerate() {
            model.hyperplane(i)?;
        }
        Ok(model)
    }
}
