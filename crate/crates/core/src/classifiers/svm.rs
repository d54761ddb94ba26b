//! Soft-margin linear SVM trained by stochastic subgradient descent in the
//! tangent space of a reference point, plus the raw-coordinate baseline.
//!
//! Objective: f(w) = 0.5 |w|^2 + C * sum_i max(0, 1 - y_i <v_i, w>). Each
//! step samples one example uniformly, takes the subgradient of the sampled
//! term scaled to the full sum, and steps with rate 1 / (t + 1000). The full
//! objective is evaluated every N steps; training stops when it decreases by
//! at most `tol` (increases never stop early) or after `max_iters` steps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dataset::LabeledDataset;
use crate::error::{Error, Result};
use crate::geometry::{log_map_raw, Hyperplane, PoincarePoint};
use crate::linalg::{axpy, dot, norm_sq, scale};
use crate::scalar::{non_negative, strictly_positive, Float};

/// Hyperparameters for `svm_train` and `euclidean_svm_train`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct SvmConfig<F: Float> {
    /// Hinge trade-off coefficient; 1000 approximates a hard margin.
    pub c: F,
    /// Convergence threshold on the objective decrease between checkpoints.
    /// Defaults to 1e-6 * N * C.
    pub tol: Option<F>,
    /// Step budget. Defaults to 100 * N.
    pub max_iters: Option<u64>,
    /// Seed for the uniform example sampler.
    pub seed: u64,
}

impl<F: Float> Default for SvmConfig<F> {
    fn default() -> Self {
        SvmConfig { c: F::cast(1000.0), tol: None, max_iters: None, seed: 0 }
    }
}

/// Trained SVM: hyperplane, hinge coefficient, and the optimization trace.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct SvmModel<F: Float> {
    hyperplane: Hyperplane<F>,
    c: F,
    objective_trace: Vec<F>,
    iterations: u64,
    converged: bool,
}

impl<F: Float> SvmModel<F> {
    pub fn hyperplane(&self) -> &Hyperplane<F> {
        &self.hyperplane
    }

    pub fn c(&self) -> F {
        self.c
    }

    /// Objective values at initialization and at every N-step checkpoint.
    pub fn objective_trace(&self) -> &[F] {
        &self.objective_trace
    }

    pub fn iterations(&self) -> u64 {
        self.iterations
    }

    /// True when the checkpoint criterion stopped training before the budget.
    pub fn converged(&self) -> bool {
        self.converged
    }
}

/// Row-major feature matrix kept flat for the sampling loop.
struct Features<F> {
    data: Vec<F>,
    dim: usize,
}

impl<F: Float> Features<F> {
    fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    fn rows(&self) -> usize {
        self.data.len() / self.dim
    }
}

fn objective<F: Float>(feats: &Features<F>, labels: &[i32], c: F, w: &[F]) -> F {
    let mut hinge = F::zero();
    for (i, y) in labels.iter().enumerate() {
        let m = F::one() - F::cast(*y) * dot(feats.row(i), w);
        if m > F::zero() {
            hinge += m;
        }
    }
    F::cast(0.5) * norm_sq(w) + c * hinge
}

fn sgd<F: Float>(
    feats: &Features<F>,
    labels: &[i32],
    cfg: &SvmConfig<F>,
) -> Result<(Vec<F>, Vec<F>, u64, bool)> {
    if !strictly_positive(cfg.c) {
        return Err(Error::InvalidArgument("hinge coefficient must be positive".into()));
    }
    let n = feats.rows();
    let nf = F::cast(n);
    let tol = cfg.tol.unwrap_or(F::cast(1e-6) * nf * cfg.c);
    if !non_negative(tol) {
        return Err(Error::InvalidArgument("tolerance must be >= 0".into()));
    }
    let max_iters = cfg.max_iters.unwrap_or(100 * n as u64);
    let checkpoint = n as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut w = vec![F::zero(); feats.dim];
    let mut trace = vec![objective(feats, labels, cfg.c, &w)];
    let mut prev = trace[0];
    let scaled_c = nf * cfg.c;
    let mut iterations = 0u64;
    let mut converged = false;
    for t in 1..=max_iters {
        iterations = t;
        let i = rng.gen_range(0..n);
        let row = feats.row(i);
        let y = F::cast(labels[i]);
        let lr = F::one() / F::cast(t + 1000);
        let active = F::one() - y * dot(row, &w) >= F::zero();
        scale(F::one() - lr, &mut w);
        if active {
            axpy(lr * scaled_c * y, row, &mut w);
        }
        if t % checkpoint == 0 {
            let f = objective(feats, labels, cfg.c, &w);
            trace.push(f);
            let decrease = prev - f;
            if decrease >= F::zero() && decrease <= tol {
                converged = true;
                break;
            }
            prev = f;
        }
    }
    if !converged && !iterations.is_multiple_of(checkpoint) {
        trace.push(objective(feats, labels, cfg.c, &w));
    }
    Ok((w, trace, iterations, converged))
}

/// Trains in the tangent space at `p`: features are v_i = log_p(x_i).
pub fn svm_train<F: Float>(
    ds: &LabeledDataset<F>,
    p: &PoincarePoint<F>,
    cfg: &SvmConfig<F>,
) -> Result<SvmModel<F>> {
    ds.require_binary()?;
    if ds.dim() != p.dim() {
        return Err(Error::DimensionMismatch { expected: ds.dim(), got: p.dim() });
    }
    let dim = ds.dim();
    let sigma = p.conformal_factor();
    let mut data = Vec::with_capacity(ds.len() * dim);
    for x in ds.points() {
        data.extend(log_map_raw(p.coords(), sigma, x.coords()));
    }
    let feats = Features { data, dim };
    let (w, trace, iterations, converged) = sgd(&feats, ds.labels(), cfg)?;
    Ok(SvmModel {
        hyperplane: Hyperplane::from_components(p.clone(), w)?,
        c: cfg.c,
        objective_trace: trace,
        iterations,
        converged,
    })
}

/// Baseline trained on raw coordinates (v_i = x_i). The returned hyperplane
/// is based at the origin, where the tangent map only rescales radially, so
/// its decision signs agree with the raw-coordinate classifier everywhere.
pub fn euclidean_svm_train<F: Float>(
    ds: &LabeledDataset<F>,
    cfg: &SvmConfig<F>,
) -> Result<SvmModel<F>> {
    ds.require_binary()?;
    let dim = ds.dim();
    let mut data = Vec::with_capacity(ds.len() * dim);
    for x in ds.points() {
        data.extend_from_slice(x.coords());
    }
    let feats = Features { data, dim };
    let (w, trace, iterations, converged) = sgd(&feats, ds.labels(), cfg)?;
    Ok(SvmModel {
        hyperplane: Hyperplane::from_components(PoincarePoint::origin(dim), w)?,
        c: cfg.c,
        objective_trace: trace,
        iterations,
        converged,
    })
}
