//! Second-order (whitened) perceptron with ridge parameter `a`.
//!
//! Each candidate weight solves (aI + S S^T) w = xi where S collects the
//! scaled tangent vectors of past mistakes plus the current example. The
//! implementation keeps the solve incremental: for a > 0 a rank-one inverse
//! update, for a = 0 an eigendecomposition-based pseudo-inverse of the small
//! d x d Gram matrix.

use serde::{Deserialize, Serialize};

use crate::dataset::LabeledDataset;
use crate::error::{Error, Result};
use crate::geometry::{tangent_features, Hyperplane, PoincarePoint, TangentVector};
use crate::linalg::{axpy, dot, norm, pseudo_inverse, scale, symmetric_eigen, SymMat};
use crate::scalar::{non_negative, strictly_positive, Float};

/// Mistake history of a second-order run.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct SecondOrderState<F: Float> {
    xi: Vec<F>,
    mistake_columns: Vec<Vec<F>>,
    a: F,
}

impl<F: Float> SecondOrderState<F> {
    /// Aggregated mistake vector: sum of y * z over mistakes.
    pub fn xi(&self) -> &[F] {
        &self.xi
    }

    /// Scaled tangent vectors recorded at mistakes, one column per mistake.
    pub fn mistake_columns(&self) -> &[Vec<F>] {
        &self.mistake_columns
    }

    pub fn ridge(&self) -> F {
        self.a
    }

    pub fn mistakes(&self) -> usize {
        self.mistake_columns.len()
    }

    fn gram(&self, dim: usize) -> SymMat<F> {
        let mut g = SymMat::zeros(dim);
        for col in &self.mistake_columns {
            g.rank_one_update(F::one(), col);
        }
        g
    }
}

/// Result of second-order training: final hyperplane plus the run state.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct SecondOrderModel<F: Float> {
    hyperplane: Hyperplane<F>,
    mistakes: usize,
    converged: bool,
    state: SecondOrderState<F>,
}

impl<F: Float> SecondOrderModel<F> {
    pub fn hyperplane(&self) -> &Hyperplane<F> {
        &self.hyperplane
    }

    pub fn mistakes(&self) -> usize {
        self.mistakes
    }

    pub fn converged(&self) -> bool {
        self.converged
    }

    pub fn state(&self) -> &SecondOrderState<F> {
        &self.state
    }
}

/// Per-example solver state, rebuilt only when a mistake occurs.
struct Solver<F: Float> {
    a: F,
    dim: usize,
    gram: SymMat<F>,
    /// Cached (aI + X X^T)^(-1 or +) applied to xi.
    w_bar: Vec<F>,
    /// Inverse (a > 0) or pseudo-inverse (a = 0) of aI + X X^T.
    inv: SymMat<F>,
    /// Orthonormal basis of the Gram range (a = 0 only, while rank < dim).
    range: Vec<Vec<F>>,
    rank: usize,
}

impl<F: Float> Solver<F> {
    fn new(a: F, dim: usize) -> Self {
        let inv = if a > F::zero() {
            SymMat::identity_scaled(dim, F::one() / a)
        } else {
            SymMat::zeros(dim)
        };
        Solver {
            a,
            dim,
            gram: SymMat::zeros(dim),
            w_bar: vec![F::zero(); dim],
            inv,
            range: Vec::new(),
            rank: 0,
        }
    }

    /// Raw prediction score for example z. Exactly zero when a = 0 and z has
    /// a component outside the span of past mistakes: appending z then makes
    /// the pseudo-inverse solution orthogonal to xi along z.
    fn score(&self, z: &[F]) -> F {
        if self.a == F::zero() && self.rank < self.dim && !self.in_range(z) {
            return F::zero();
        }
        dot(z, &self.w_bar)
    }

    fn in_range(&self, z: &[F]) -> bool {
        let nz = norm(z);
        if nz == F::zero() {
            return true;
        }
        let mut residual = z.to_vec();
        for q in &self.range {
            let c = dot(q, z);
            axpy(-c, q, &mut residual);
        }
        norm(&residual) <= F::cast(1e-9) * nz
    }

    fn record_mistake(&mut self, z: &[F], xi: &[F]) {
        self.gram.rank_one_update(F::one(), z);
        if self.a > F::zero() {
            // Sherman-Morrison: (K + zz^T)^-1 = K^-1 - K^-1 z z^T K^-1 / (1 + z^T K^-1 z).
            let u = self.inv.matvec(z);
            let denom = F::one() + dot(z, &u);
            self.inv.rank_one_update(-(F::one() / denom), &u);
            self.rank = self.dim;
        } else {
            let pinv = pseudo_inverse(&self.gram);
            self.inv = pinv.inv;
            self.range = pinv.range;
            self.rank = pinv.rank;
        }
        self.w_bar = self.inv.matvec(xi);
    }
}

/// Runs the second-order perceptron in fixed dataset order until an
/// error-free pass or `max_epochs` passes.
pub fn second_order_train<F: Float>(
    ds: &LabeledDataset<F>,
    p: &PoincarePoint<F>,
    a: F,
    max_epochs: usize,
) -> Result<SecondOrderModel<F>> {
    ds.require_binary()?;
    if ds.dim() != p.dim() {
        return Err(Error::DimensionMismatch { expected: ds.dim(), got: p.dim() });
    }
    if !non_negative(a) {
        return Err(Error::InvalidArgument("ridge parameter must be >= 0".into()));
    }
    if max_epochs == 0 {
        return Err(Error::InvalidArgument("max_epochs must be at least 1".into()));
    }
    let d = ds.dim();
    let feats = tangent_features(p, ds.points());
    let z: Vec<Vec<F>> = feats
        .iter()
        .map(|(v, eta)| {
            let mut zi = v.clone();
            scale(*eta, &mut zi);
            zi
        })
        .collect();

    let mut solver = Solver::new(a, d);
    let mut xi = vec![F::zero(); d];
    let mut columns: Vec<Vec<F>> = Vec::new();
    let mut converged = false;
    for _ in 0..max_epochs {
        let mut clean = true;
        for (i, (_, y)) in ds.iter().enumerate() {
            let s = solver.score(&z[i]);
            let pred = if s > F::zero() {
                1
            } else if s < F::zero() {
                -1
            } else {
                0
            };
            if pred != y {
                axpy(F::cast(y), &z[i], &mut xi);
                columns.push(z[i].clone());
                solver.record_mistake(&z[i], &xi);
                clean = false;
            }
        }
        if clean {
            converged = true;
            break;
        }
    }
    let hyperplane = Hyperplane::from_components(p.clone(), solver.w_bar.clone())?;
    Ok(SecondOrderModel {
        hyperplane,
        mistakes: columns.len(),
        converged,
        state: SecondOrderState { xi, mistake_columns: columns, a },
    })
}

/// Worst-case mistake count from the run's mistake spectrum:
/// (1/sinh eps) * sqrt((a + lambda_w) * sum_j log(1 + lambda_j / a)), where
/// lambda_j are eigenvalues of X X^T and lambda_w = w*^T X X^T w*.
/// Only defined for runs trained with a > 0.
pub fn second_order_bound<F: Float>(
    state: &SecondOrderState<F>,
    w_star: &TangentVector<F>,
    eps: F,
) -> Result<F> {
    if !strictly_positive(eps) {
        return Err(Error::InvalidArgument("margin must be positive".into()));
    }
    if state.mistakes() == 0 {
        return Ok(F::zero());
    }
    if !strictly_positive(state.a) {
        return Err(Error::BoundNotComputable);
    }
    let d = state.mistake_columns[0].len();
    if w_star.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, got: w_star.dim() });
    }
    let wn = w_star.norm();
    if (wn - F::one()).abs() > F::cast(1e-6) {
        return Err(Error::InvalidArgument("bound requires a unit-norm separator".into()));
    }
    let gram = state.gram(d);
    let (eigenvalues, _) = symmetric_eigen(&gram);
    let mut log_sum = F::zero();
    for lambda in &eigenvalues {
        let l = lambda.max(F::zero());
        log_sum += (F::one() + l / state.a).ln();
    }
    let lambda_w = state
        .mistake_columns
        .iter()
        .map(|col| {
            let c = dot(col, w_star.components());
            c * c
        })
        .sum::<F>();
    Ok(((state.a + lambda_w) * log_sum).sqrt() / eps.sinh())
}
