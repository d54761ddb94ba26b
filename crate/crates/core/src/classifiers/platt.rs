//! Probability calibration: fits a sigmoid over raw decision scores.
//!
//! Implements the damped-Newton procedure with prior-smoothed targets:
//! minimize the negative log-likelihood of P(y=1|s) = 1 / (1 + exp(A s + B))
//! over (A, B), with targets (N+ + 1)/(N+ + 2) and 1/(N- + 2) instead of hard
//! 0/1 labels, a regularized Hessian, and a backtracking line search.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Float;

/// Sigmoid parameters mapping a raw score to P(class = +1).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct PlattParams<F: Float> {
    pub a: F,
    pub b: F,
}

impl<F: Float> PlattParams<F> {
    /// P(y = +1 | score) = 1 / (1 + exp(A * score + B)), evaluated stably.
    pub fn probability(&self, score: F) -> F {
        let u = self.a * score + self.b;
        if u >= F::zero() {
            let e = (-u).exp();
            e / (F::one() + e)
        } else {
            F::one() / (F::one() + u.exp())
        }
    }
}

fn nll<F: Float>(scores: &[F], targets: &[F], a: F, b: F) -> F {
    let mut f = F::zero();
    for (s, t) in scores.iter().zip(targets) {
        let u = a * *s + b;
        if u >= F::zero() {
            f += *t * u + (-u).exp().ln_1p();
        } else {
            f += (*t - F::one()) * u + u.exp().ln_1p();
        }
    }
    f
}

/// Fits (A, B) on training scores and their true labels in {-1, +1}.
pub fn platt_fit<F: Float>(scores: &[F], labels: &[i32]) -> Result<PlattParams<F>> {
    if scores.len() != labels.len() {
        return Err(Error::InvalidArgument(format!(
            "{} scores but {} labels",
            scores.len(),
            labels.len()
        )));
    }
    if labels.iter().any(|l| *l != 1 && *l != -1) {
        return Err(Error::NonBinaryLabels);
    }
    let n_pos = labels.iter().filter(|l| **l == 1).count();
    let n_neg = labels.len() - n_pos;
    if n_pos == 0 || n_neg == 0 {
        return Err(Error::InvalidArgument(
            "calibration needs at least one example of each label".into(),
        ));
    }

    let hi = F::cast(n_pos as f64 + 1.0) / F::cast(n_pos as f64 + 2.0);
    let lo = F::one() / F::cast(n_neg as f64 + 2.0);
    let targets: Vec<F> = labels.iter().map(|l| if *l == 1 { hi } else { lo }).collect();

    let sigma = F::cast(1e-12);
    let grad_eps = F::cast(1e-5) * F::cast(labels.len());
    let min_step = F::cast(1e-10);

    let mut a = F::zero();
    let mut b = (F::cast(n_neg as f64 + 1.0) / F::cast(n_pos as f64 + 1.0)).ln();
    let mut fval = nll(scores, &targets, a, b);

    for _ in 0..200 {
        let mut h11 = sigma;
        let mut h22 = sigma;
        let mut h21 = F::zero();
        let mut g1 = F::zero();
        let mut g2 = F::zero();
        for (s, t) in scores.iter().zip(&targets) {
            let u = a * *s + b;
            let (p, q) = if u >= F::zero() {
                let e = (-u).exp();
                (e / (F::one() + e), F::one() / (F::one() + e))
            } else {
                let e = u.exp();
                (F::one() / (F::one() + e), e / (F::one() + e))
            };
            let d2 = p * q;
            h11 += *s * *s * d2;
            h22 += d2;
            h21 += *s * d2;
            let d1 = *t - p;
            g1 += *s * d1;
            g2 += d1;
        }
        if g1.abs() < grad_eps && g2.abs() < grad_eps {
            break;
        }
        let det = h11 * h22 - h21 * h21;
        let da = -(h22 * g1 - h21 * g2) / det;
        let db = -(-h21 * g1 + h11 * g2) / det;
        let gd = g1 * da + g2 * db;
        let mut step = F::one();
        let mut advanced = false;
        while step >= min_step {
            let na = a + step * da;
            let nb = b + step * db;
            let nf = nll(scores, &targets, na, nb);
            if nf < fval + F::cast(1e-4) * step * gd {
                a = na;
                b = nb;
                fval = nf;
                advanced = true;
                break;
            }
            step /= F::cast(2.0);
        }
        if !advanced {
            break;
        }
    }
    Ok(PlattParams { a, b })
}
