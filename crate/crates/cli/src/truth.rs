//! Ground-truth sidecar: the hyperplane and sampling parameters behind a
//! generated dataset, written next to the dataset file as JSON.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use poincare_linear::{Hyperplane, PoincarePoint, Result};

#[derive(Serialize, Deserialize)]
pub struct TruthFile {
    pub dimension: usize,
    pub r: f64,
    pub eps: f64,
    pub seed: u64,
    pub p: Vec<f64>,
    pub w_star: Vec<f64>,
}

impl TruthFile {
    pub fn new(h: &Hyperplane<f64>, r: f64, eps: f64, seed: u64) -> Self {
        TruthFile {
            dimension: h.dim(),
            r,
            eps,
            seed,
            p: h.p().coords().to_vec(),
            w_star: h.normal().components().to_vec(),
        }
    }

    pub fn hyperplane(&self) -> Result<Hyperplane<f64>> {
        Hyperplane::from_components(PoincarePoint::new(self.p.clone())?, self.w_star.clone())
    }

    pub fn reference_point(&self) -> Result<PoincarePoint<f64>> {
        PoincarePoint::new(self.p.clone())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut writer = BufWriter::new(File::create(path)?);
        serde_json::to_writer_pretty(&mut writer, self)?;
        writer.write_all(b"\n")?;
        writer.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let truth: TruthFile = serde_json::from_reader(BufReader::new(File::open(path)?))?;
        truth.hyperplane()?;
        Ok(truth)
    }
}
