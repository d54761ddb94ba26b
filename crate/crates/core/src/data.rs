//! Synthetic data generation, dataset file I/O and stratified splitting.
//!
//! Generated datasets are margin-separated by construction: points are drawn
//! uniformly from a Euclidean ball of radius `r`, labeled by a random
//! hyperplane through a reference point, and resampled until every survivor
//! is at least `eps` away from the boundary in hyperbolic distance.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::dataset::LabeledDataset;
use crate::error::{Error, Result};
use crate::geometry::{dist_to_hyperplane, hyperplane_side, Hyperplane, PoincarePoint};
use crate::scalar::{strictly_positive, Float};

/// Attempts between acceptance-rate checks during rejection sampling.
const PROBE_BATCH: u64 = 1_000_000;

/// Acceptance rate below which the requested margin is declared unsatisfiable.
const MIN_ACCEPTANCE_RATE: f64 = 1e-6;

/// Parameters for synthetic margin-separated dataset generation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct SynthConfig<F: Float> {
    /// Number of points to accept.
    pub n: usize,
    /// Ambient dimension.
    pub dim: usize,
    /// Euclidean norm bound for sampled points.
    pub r: F,
    /// Reference-point norm as a fraction of `r`, in [0, 1).
    pub p_norm_fraction: F,
    /// Minimum hyperbolic distance from any point to the decision boundary.
    pub eps: F,
    /// RNG seed; equal seeds reproduce the dataset exactly.
    pub seed: u64,
}

impl<F: Float> SynthConfig<F> {
    /// Starts from the default norm bound 0.95, margin 0.01 and seed 0.
    pub fn new(n: usize, dim: usize) -> Self {
        SynthConfig {
            n,
            dim,
            r: F::from_f64(0.95).unwrap(),
            p_norm_fraction: F::zero(),
            eps: F::from_f64(0.01).unwrap(),
            seed: 0,
        }
    }

    /// Checks ranges: n ≥ 1, dim ≥ 1, 0 < r < 1, 0 ≤ p_norm_fraction < 1, eps > 0.
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        if self.dim == 0 {
            return Err(Error::InvalidArgument("dim must be at least 1".into()));
        }
        if !(self.r > F::zero() && self.r < F::one()) {
            return Err(Error::InvalidArgument("r must lie in (0, 1)".into()));
        }
        if !(self.p_norm_fraction >= F::zero() && self.p_norm_fraction < F::one()) {
            return Err(Error::InvalidArgument(
                "p_norm_fraction must lie in [0, 1)".into(),
            ));
        }
        if !strictly_positive(self.eps) {
            return Err(Error::InvalidArgument("eps must be positive".into()));
        }
        Ok(())
    }
}

/// Draws a uniformly random direction on the unit sphere.
fn unit_direction<R: Rng>(rng: &mut R, dim: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return v.into_iter().map(|c| c / norm).collect();
        }
    }
}

/// Generates a margin-separated dataset plus the hyperplane that labeled it.
///
/// The returned normal has unit norm. Points with zero side value or within
/// `eps` of the boundary are rejected and redrawn.
pub fn generate_synthetic<F: Float>(
    cfg: &SynthConfig<F>,
) -> Result<(LabeledDataset<F>, Hyperplane<F>)> {
    cfg.validate()?;
    let d = cfg.dim;
    let r = cfg.r.to_f64().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let normal: Vec<F> = unit_direction(&mut rng, d)
        .into_iter()
        .map(|c| F::from_f64(c).unwrap())
        .collect();
    let p = if cfg.p_norm_fraction == F::zero() {
        PoincarePoint::origin(d)
    } else {
        let p_norm = cfg.p_norm_fraction.to_f64().unwrap() * r;
        let coords: Vec<F> = unit_direction(&mut rng, d)
            .into_iter()
            .map(|c| F::from_f64(c * p_norm).unwrap())
            .collect();
        PoincarePoint::new(coords)?
    };
    let truth = Hyperplane::from_components(p, normal)?;

    let mut points = Vec::with_capacity(cfg.n);
    let mut labels = Vec::with_capacity(cfg.n);
    let mut attempted: u64 = 0;
    while points.len() < cfg.n {
        attempted += 1;
        let dir = unit_direction(&mut rng, d);
        let u: f64 = rng.gen();
        let radius = r * u.powf(1.0 / d as f64);
        let coords: Vec<F> = dir
            .into_iter()
            .map(|c| F::from_f64(c * radius).unwrap())
            .collect();
        let x = PoincarePoint::new(coords)?;
        let side = hyperplane_side(&x, &truth)?;
        if side != 0 && dist_to_hyperplane(&x, &truth)? >= cfg.eps {
            labels.push(side);
            points.push(x);
        }
        if attempted.is_multiple_of(PROBE_BATCH) {
            let rate = points.len() as f64 / attempted as f64;
            if rate < MIN_ACCEPTANCE_RATE {
                return Err(Error::UnsatisfiableConfig {
                    accepted: points.len() as u64,
                    attempted,
                });
            }
        }
    }
    Ok((LabeledDataset::new(points, labels)?, truth))
}

/// Writes a dataset as text: header `# d=<d> n=<n>`, rows `label,x1,...,xd`.
pub fn save_dataset_to<F: Float, W: Write>(ds: &LabeledDataset<F>, writer: W) -> Result<()> {
    let mut out = BufWriter::new(writer);
    writeln!(out, "# d={} n={}", ds.dim(), ds.len())?;
    for (point, label) in ds.iter() {
        write!(out, "{label}")?;
        for c in point.coords() {
            write!(out, ",{c}")?;
        }
        writeln!(out)?;
    }
    out.flush()?;
    Ok(())
}

/// Writes a dataset to a file path.
pub fn save_dataset<F: Float>(ds: &LabeledDataset<F>, path: &Path) -> Result<()> {
    save_dataset_to(ds, File::create(path)?)
}

fn parse_header(line: &str) -> Option<(usize, usize)> {
    let rest = line.trim().strip_prefix('#')?;
    let mut d = None;
    let mut n = None;
    for token in rest.split_whitespace() {
        if let Some(v) = token.strip_prefix("d=") {
            d = v.parse().ok();
        } else if let Some(v) = token.strip_prefix("n=") {
            n = v.parse().ok();
        }
    }
    Some((d?, n?))
}

/// Reads a dataset written by [`save_dataset_to`], validating every row.
pub fn load_dataset_from<F: Float, R: BufRead>(reader: R) -> Result<LabeledDataset<F>> {
    let mut lines = reader.lines().enumerate();
    let (dim, n) = loop {
        match lines.next() {
            None => return Err(Error::EmptyDataset),
            Some((idx, line)) => {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                break parse_header(&line).ok_or(Error::Parse {
                    line: idx + 1,
                    msg: format!("expected header `# d=<d> n=<n>`, got `{}`", line.trim()),
                })?;
            }
        }
    };

    let mut points = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    let mut last_line = 1;
    for (idx, line) in lines {
        let line = line?;
        let row = line.trim();
        if row.is_empty() {
            continue;
        }
        let line_no = idx + 1;
        last_line = line_no;
        let mut fields = row.split(',');
        let label: i32 = fields
            .next()
            .unwrap()
            .trim()
            .parse()
            .map_err(|_| Error::Parse {
                line: line_no,
                msg: "label is not an integer".into(),
            })?;
        let mut coords = Vec::with_capacity(dim);
        for field in fields {
            let c: F = field.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("`{}` is not a number", field.trim()),
            })?;
            coords.push(c);
        }
        if coords.len() != dim {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected {dim} coordinates, found {}", coords.len()),
            });
        }
        let point = PoincarePoint::new(coords).map_err(|e| Error::Parse {
            line: line_no,
            msg: e.to_string(),
        })?;
        points.push(point);
        labels.push(label);
    }
    if points.is_empty() {
        return Err(Error::EmptyDataset);
    }
    if points.len() != n {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("header declares n={n}, found {} rows", points.len()),
        });
    }
    LabeledDataset::new(points, labels)
}

/// Reads a dataset from a file path.
pub fn load_dataset<F: Float>(path: &Path) -> Result<LabeledDataset<F>> {
    load_dataset_from(BufReader::new(File::open(path)?))
}

/// Splits a dataset into train/test parts, stratified by class.
///
/// Each class contributes `min(count, floor(fraction * count) + 1)` training
/// points, so every class keeps at least one training example and sizes stay
/// within one point of the exact fraction. Equal seeds reproduce the split.
pub fn train_test_split<F: Float>(
    ds: &LabeledDataset<F>,
    fraction: f64,
    seed: u64,
) -> Result<(LabeledDataset<F>, LabeledDataset<F>)> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(Error::InvalidArgument(
            "split fraction must lie in (0, 1)".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut train_idx = Vec::new();
    let mut test_idx = Vec::new();
    for class in ds.class_ids() {
        let mut idx: Vec<usize> = (0..ds.len()).filter(|&i| ds.label(i) == class).collect();
        idx.shuffle(&mut rng);
        let take = ((fraction * idx.len() as f64).floor() as usize + 1).min(idx.len());
        train_idx.extend_from_slice(&idx[..take]);
        test_idx.extend_from_slice(&idx[take..]);
    }
    train_idx.sort_unstable();
    test_idx.sort_unstable();
    Ok((ds.subset(&train_idx)?, ds.subset(&test_idx)?))
}

/// Reads a dataset from standard input.
pub fn load_dataset_stdin<F: Float>() -> Result<LabeledDataset<F>> {
    load_dataset_from(io::stdin().lock())
}

/// Writes a dataset to standard output.
pub fn save_dataset_stdout<F: Float>(ds: &LabeledDataset<F>) -> Result<()> {
    save_dataset_to(ds, io::stdout().lock())
}
