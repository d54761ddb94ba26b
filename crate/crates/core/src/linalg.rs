//! Minimal dense linear algebra for small symmetric systems.

use crate::scalar::Float;

pub(crate) fn dot<F: Float>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    let mut s = F::zero();
    for (x, y) in a.iter().zip(b) {
        s += *x * *y;
    }
    s
}

pub(crate) fn norm_sq<F: Float>(a: &[F]) -> F {
    dot(a, a)
}

pub(crate) fn norm<F: Float>(a: &[F]) -> F {
    norm_sq(a).sqrt()
}

/// y += alpha * x
pub(crate) fn axpy<F: Float>(alpha: F, x: &[F], y: &mut [F]) {
    debug_assert_eq!(x.len(), y.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * *xi;
    }
}

pub(crate) fn scale<F: Float>(alpha: F, x: &mut [F]) {
    for xi in x.iter_mut() {
        *xi *= alpha;
    }
}

/// Dense symmetric n x n matrix, row-major.
#[derive(Clone, Debug)]
pub(crate) struct SymMat<F> {
    pub n: usize,
    pub data: Vec<F>,
}

impl<F: Float> SymMat<F> {
    pub fn zeros(n: usize) -> Self {
        SymMat { n, data: vec![F::zero(); n * n] }
    }

    pub fn identity_scaled(n: usize, alpha: F) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = alpha;
        }
        m
    }

    #[cfg(test)]
    pub fn at(&self, i: usize, j: usize) -> F {
        self.data[i * self.n + j]
    }

    #[cfg(test)]
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.n + j] = v;
    }

    /// self += alpha * x x^T
    pub fn rank_one_update(&mut self, alpha: F, x: &[F]) {
        let n = self.n;
        for (i, &xi) in x.iter().enumerate() {
            let axi = alpha * xi;
            for (slot, &xj) in self.data[i * n..(i + 1) * n].iter_mut().zip(x) {
                *slot += axi * xj;
            }
        }
    }

    pub fn matvec(&self, x: &[F]) -> Vec<F> {
        let n = self.n;
        let mut out = vec![F::zero(); n];
        for (i, o) in out.iter_mut().enumerate() {
            *o = dot(&self.data[i * n..(i + 1) * n], x);
        }
        out
    }
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues (ascending) and, per eigenvalue, its eigenvector as a
/// row of the returned matrix.
pub(crate) fn symmetric_eigen<F: Float>(m: &SymMat<F>) -> (Vec<F>, Vec<Vec<F>>) {
    let n = m.n;
    let mut a = m.data.clone();
    let mut v = vec![F::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = F::one();
    }
    let eps = F::epsilon();
    for _sweep in 0..100 {
        let mut off = F::zero();
        for i in 0..n {
            for j in (i + 1)..n {
                off += a[i * n + j] * a[i * n + j];
            }
        }
        let mut diag = F::zero();
        for i in 0..n {
            diag += a[i * n + i] * a[i * n + i];
        }
        if off <= eps * eps * (diag + off) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= eps * (a[p * n + p].abs() + a[q * n + q].abs()) {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (F::cast(2.0) * apq);
                let t = {
                    let sign = if theta >= F::zero() { F::one() } else { -F::one() };
                    sign / (theta.abs() + (theta * theta + F::one()).sqrt())
                };
                let c = F::one() / (t * t + F::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vpk = v[p * n + k];
                    let vqk = v[q * n + k];
                    v[p * n + k] = c * vpk - s * vqk;
                    v[q * n + k] = s * vpk + c * vqk;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[i * n + i].partial_cmp(&a[j * n + j]).unwrap_or(std::cmp::Ordering::Equal)
    });
    let values: Vec<F> = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors: Vec<Vec<F>> =
        order.iter().map(|&i| v[i * n..(i + 1) * n].to_vec()).collect();
    (values, vectors)
}

/// Moore-Penrose pseudo-inverse of a symmetric PSD matrix, with its numeric
/// rank and range basis (eigenvectors of the retained eigenvalues).
pub(crate) struct PseudoInverse<F> {
    pub inv: SymMat<F>,
    pub rank: usize,
    pub range: Vec<Vec<F>>,
}

pub(crate) fn pseudo_inverse<F: Float>(m: &SymMat<F>) -> PseudoInverse<F> {
    let n = m.n;
    let (values, vectors) = symmetric_eigen(m);
    let max_ev = values.iter().fold(F::zero(), |acc, &v| acc.max(v.abs()));
    let tol = max_ev.max(F::one()) * F::cast(n as f64) * F::epsilon() * F::cast(16.0);
    let mut inv = SymMat::zeros(n);
    let mut range = Vec::new();
    for (lam, vec) in values.iter().zip(&vectors) {
        if *lam > tol {
            inv.rank_one_update(F::one() / *lam, vec);
            range.push(vec.clone());
        }
    }
    PseudoInverse { rank: range.len(), inv, range }
}

/// Exact inverse of a symmetric positive definite matrix via eigendecomposition.
#[cfg(test)]
pub(crate) fn spd_inverse<F: Float>(m: &SymMat<F>) -> SymMat<F> {
    let n = m.n;
    let (values, vectors) = symmetric_eigen(m);
    let mut inv = SymMat::zeros(n);
    for (lam, vec) in values.iter().zip(&vectors) {
        inv.rank_one_update(F::one() / *lam, vec);
    }
    inv
}
