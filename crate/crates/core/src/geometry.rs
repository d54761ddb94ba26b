//! Gyrovector operations on the Poincare ball (unit curvature).
//!
//! Points live in the open unit ball; classifier inner products live in the
//! tangent space at a reference point. All operations are exact formula
//! evaluations with outputs renormalized to stay strictly inside the ball.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{axpy, dot, norm, norm_sq, scale};
use crate::scalar::Float;

/// A point of the open unit ball.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct PoincarePoint<F: Float> {
    coords: Vec<F>,
}

impl<F: Float> PoincarePoint<F> {
    /// Builds a point, rejecting coordinates with norm >= 1 or non-finite entries.
    pub fn new(coords: Vec<F>) -> Result<Self> {
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument("non-finite coordinate".into()));
        }
        let n = norm(&coords);
        if n >= F::one() {
            return Err(Error::OutsideBall { norm: n.to_f64().unwrap_or(f64::NAN) });
        }
        Ok(PoincarePoint { coords })
    }

    /// The ball origin in `dim` dimensions.
    pub fn origin(dim: usize) -> Self {
        PoincarePoint { coords: vec![F::zero(); dim] }
    }

    pub(crate) fn from_clamped(coords: Vec<F>) -> Self {
        PoincarePoint { coords }
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn norm(&self) -> F {
        norm(&self.coords)
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(|c| *c == F::zero())
    }

    /// Conformal factor sigma_p = 2 / (1 - |p|^2).
    pub fn conformal_factor(&self) -> F {
        F::cast(2.0) / (F::one() - norm_sq(&self.coords))
    }

    /// The additive inverse -p (always a valid point).
    pub fn neg(&self) -> Self {
        PoincarePoint { coords: self.coords.iter().map(|c| -*c).collect() }
    }
}

/// A vector of the tangent space at a base point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct TangentVector<F: Float> {
    base: PoincarePoint<F>,
    components: Vec<F>,
}

impl<F: Float> TangentVector<F> {
    pub fn new(base: PoincarePoint<F>, components: Vec<F>) -> Result<Self> {
        if components.len() != base.dim() {
            return Err(Error::DimensionMismatch { expected: base.dim(), got: components.len() });
        }
        if components.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument("non-finite component".into()));
        }
        Ok(TangentVector { base, components })
    }

    pub fn zero(base: PoincarePoint<F>) -> Self {
        let d = base.dim();
        TangentVector { base, components: vec![F::zero(); d] }
    }

    pub fn base(&self) -> &PoincarePoint<F> {
        &self.base
    }

    pub fn components(&self) -> &[F] {
        &self.components
    }

    pub fn norm(&self) -> F {
        norm(&self.components)
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }
}

/// Decision boundary: points whose log map at `p` is orthogonal to the normal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct Hyperplane<F: Float> {
    p: PoincarePoint<F>,
    normal: TangentVector<F>,
}

impl<F: Float> Hyperplane<F> {
    /// Builds a hyperplane from a reference point and a tangent normal at it.
    pub fn new(p: PoincarePoint<F>, normal: TangentVector<F>) -> Result<Self> {
        if normal.base() != &p {
            return Err(Error::BaseMismatch);
        }
        if normal.norm() <= F::zero() {
            return Err(Error::ZeroNormal);
        }
        Ok(Hyperplane { p, normal })
    }

    /// Convenience constructor taking raw normal components based at `p`.
    pub fn from_components(p: PoincarePoint<F>, normal: Vec<F>) -> Result<Self> {
        let w = TangentVector::new(p.clone(), normal)?;
        Hyperplane::new(p, w)
    }

    pub fn p(&self) -> &PoincarePoint<F> {
        &self.p
    }

    pub fn normal(&self) -> &TangentVector<F> {
        &self.normal
    }

    pub fn dim(&self) -> usize {
        self.p.dim()
    }
}

fn check_dims(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { expected: a, got: b });
    }
    Ok(())
}

/// Largest norm representable strictly inside the ball for this scalar type.
fn max_norm<F: Float>() -> F {
    F::one() - F::boundary_eps()
}

fn atanh_clamped<F: Float>(x: F) -> F {
    x.min(max_norm::<F>()).atanh()
}

/// Rescales coordinates so the norm stays <= 1 - boundary_eps.
pub(crate) fn clamp_to_ball<F: Float>(coords: &mut [F]) {
    let n = norm(coords);
    let cap = max_norm::<F>();
    if n > cap {
        scale(cap / n, coords);
    }
}

pub(crate) fn mobius_add_raw<F: Float>(x: &[F], y: &[F]) -> Vec<F> {
    let xy = dot(x, y);
    let x2 = norm_sq(x);
    let y2 = norm_sq(y);
    let two = F::cast(2.0);
    let den = F::one() + two * xy + x2 * y2;
    let ax = F::one() + two * xy + y2;
    let ay = F::one() - x2;
    let mut out: Vec<F> = x
        .iter()
        .zip(y)
        .map(|(xi, yi)| (ax * *xi + ay * *yi) / den)
        .collect();
    clamp_to_ball(&mut out);
    out
}

pub(crate) fn neg_raw<F: Float>(x: &[F]) -> Vec<F> {
    x.iter().map(|c| -*c).collect()
}

pub(crate) fn log_map_raw<F: Float>(p: &[F], sigma_p: F, x: &[F]) -> Vec<F> {
    if p == x {
        return vec![F::zero(); p.len()];
    }
    let mut q = mobius_add_raw(&neg_raw(p), x);
    let nq = norm(&q);
    if nq == F::zero() {
        return q;
    }
    let coef = F::cast(2.0) / sigma_p * atanh_clamped(nq) / nq;
    scale(coef, &mut q);
    q
}

pub(crate) fn eta_raw<F: Float>(sigma_p: F, v_norm: F) -> F {
    if v_norm == F::zero() {
        return F::zero();
    }
    let u = (sigma_p * v_norm / F::cast(2.0)).tanh();
    F::cast(2.0) * u / ((F::one() - u * u) * v_norm)
}

pub(crate) fn distance_raw<F: Float>(x: &[F], y: &[F]) -> F {
    if x == y {
        return F::zero();
    }
    let q = mobius_add_raw(&neg_raw(x), y);
    F::cast(2.0) * atanh_clamped(norm(&q))
}

/// Mobius addition x (+) y.
pub fn mobius_add<F: Float>(x: &PoincarePoint<F>, y: &PoincarePoint<F>) -> Result<PoincarePoint<F>> {
    check_dims(x.dim(), y.dim())?;
    Ok(PoincarePoint::from_clamped(mobius_add_raw(x.coords(), y.coords())))
}

/// Mobius scalar multiplication r (*) x; r (*) 0 = 0 by convention.
pub fn mobius_scalar_mul<F: Float>(r: F, x: &PoincarePoint<F>) -> PoincarePoint<F> {
    let n = x.norm();
    if n == F::zero() {
        return PoincarePoint::origin(x.dim());
    }
    let t = (r * atanh_clamped(n)).tanh();
    let mut coords: Vec<F> = x.coords().iter().map(|c| t * *c / n).collect();
    clamp_to_ball(&mut coords);
    PoincarePoint::from_clamped(coords)
}

/// Geodesic distance d(x, y) = 2 atanh |(-x) (+) y|.
pub fn distance<F: Float>(x: &PoincarePoint<F>, y: &PoincarePoint<F>) -> Result<F> {
    check_dims(x.dim(), y.dim())?;
    Ok(distance_raw(x.coords(), y.coords()))
}

/// Point at parameter t in [0, 1] of the geodesic from x to y.
pub fn geodesic_point<F: Float>(
    x: &PoincarePoint<F>,
    y: &PoincarePoint<F>,
    t: F,
) -> Result<PoincarePoint<F>> {
    check_dims(x.dim(), y.dim())?;
    if !(t >= F::zero() && t <= F::one()) {
        return Err(Error::InvalidArgument(format!("geodesic parameter {t} outside [0, 1]")));
    }
    let step = mobius_add_raw(&neg_raw(x.coords()), y.coords());
    let scaled = mobius_scalar_mul(t, &PoincarePoint::from_clamped(step));
    Ok(PoincarePoint::from_clamped(mobius_add_raw(x.coords(), scaled.coords())))
}

/// Exponential map of a tangent vector based at p.
pub fn exp_map<F: Float>(p: &PoincarePoint<F>, v: &TangentVector<F>) -> Result<PoincarePoint<F>> {
    if v.base() != p {
        return Err(Error::BaseMismatch);
    }
    let nv = v.norm();
    if nv == F::zero() {
        return Ok(p.clone());
    }
    let t = (p.conformal_factor() * nv / F::cast(2.0)).tanh();
    let mut step: Vec<F> = v.components().iter().map(|c| t * *c / nv).collect();
    clamp_to_ball(&mut step);
    Ok(PoincarePoint::from_clamped(mobius_add_raw(p.coords(), &step)))
}

/// Logarithmic map of x at base p (inverse of `exp_map`).
pub fn log_map<F: Float>(p: &PoincarePoint<F>, x: &PoincarePoint<F>) -> Result<TangentVector<F>> {
    check_dims(p.dim(), x.dim())?;
    let comps = log_map_raw(p.coords(), p.conformal_factor(), x.coords());
    Ok(TangentVector { base: p.clone(), components: comps })
}

/// Hyperbolic distance from x to the hyperplane.
pub fn dist_to_hyperplane<F: Float>(x: &PoincarePoint<F>, h: &Hyperplane<F>) -> Result<F> {
    check_dims(h.dim(), x.dim())?;
    let q = mobius_add_raw(&neg_raw(h.p().coords()), x.coords());
    let num = F::cast(2.0) * dot(&q, h.normal().components()).abs();
    let den = (F::one() - norm_sq(&q)) * h.normal().norm();
    Ok((num / den).asinh())
}

/// Same distance, evaluated from a tangent vector v = log_p(x).
pub fn dist_to_hyperplane_tangent<F: Float>(
    v: &TangentVector<F>,
    h: &Hyperplane<F>,
) -> Result<F> {
    if v.base() != h.p() {
        return Err(Error::BaseMismatch);
    }
    let nv = v.norm();
    if nv == F::zero() {
        return Ok(F::zero());
    }
    let u = (h.p().conformal_factor() * nv / F::cast(2.0)).tanh();
    let num = F::cast(2.0) * u * dot(v.components(), h.normal().components()).abs();
    let den = (F::one() - u * u) * h.normal().norm() * nv;
    Ok((num / den).asinh())
}

/// Weight eta(v) with asinh(eta(v) * |<v, w>|) = distance to the unit-normal
/// hyperplane at the base point; eta(0) = 0 by convention.
pub fn eta_weight<F: Float>(v: &TangentVector<F>, p: &PoincarePoint<F>) -> Result<F> {
    if v.base() != p {
        return Err(Error::BaseMismatch);
    }
    Ok(eta_raw(p.conformal_factor(), v.norm()))
}

/// Side of the hyperplane x falls on: sign of <log_p(x), w> in {-1, 0, +1}.
pub fn hyperplane_side<F: Float>(x: &PoincarePoint<F>, h: &Hyperplane<F>) -> Result<i32> {
    check_dims(h.dim(), x.dim())?;
    let v = log_map_raw(h.p().coords(), h.p().conformal_factor(), x.coords());
    let s = dot(&v, h.normal().components());
    Ok(if s > F::zero() {
        1
    } else if s < F::zero() {
        -1
    } else {
        0
    })
}

/// Signed score <log_p(x), w>; positive on the +1 side.
pub fn decision_score<F: Float>(x: &PoincarePoint<F>, h: &Hyperplane<F>) -> Result<F> {
    check_dims(h.dim(), x.dim())?;
    let v = log_map_raw(h.p().coords(), h.p().conformal_factor(), x.coords());
    Ok(dot(&v, h.normal().components()))
}

/// Fused per-dataset precomputation used by the training loops: for each point
/// returns (v, eta(v)) with v = log_p(x).
pub(crate) fn tangent_features<F: Float>(
    p: &PoincarePoint<F>,
    points: &[PoincarePoint<F>],
) -> Vec<(Vec<F>, F)> {
    let sigma = p.conformal_factor();
    points
        .iter()
        .map(|x| {
            let v = log_map_raw(p.coords(), sigma, x.coords());
            let e = eta_raw(sigma, norm(&v));
            (v, e)
        })
        .collect()
}

/// In-place weighted sum used by perceptron updates: acc += alpha * v.
pub(crate) fn accumulate<F: Float>(alpha: F, v: &[F], acc: &mut [F]) {
    axpy(alpha, v, acc);
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::distributions::Distribution;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn pt(coords: &[f64]) -> PoincarePoint<f64> {
        PoincarePoint::new(coords.to_vec()).unwrap()
    }

    fn tv(base: &PoincarePoint<f64>, comps: &[f64]) -> TangentVector<f64> {
        TangentVector::new(base.clone(), comps.to_vec()).unwrap()
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn assert_vec_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert_close(*x, *y, tol);
        }
    }

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
    }

    fn rand_point(rng: &mut ChaCha8Rng, dim: usize, cap: f64) -> PoincarePoint<f64> {
        let dir: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
        let n = dir.iter().map(|c| c * c).sum::<f64>().sqrt();
        let u: f64 = rng.gen();
        let r = cap * u.powf(1.0 / dim as f64);
        PoincarePoint::new(dir.into_iter().map(|c| c / n * r).collect()).unwrap()
    }

    #[test]
    fn mobius_add_known_values() {
        assert_vec_close(
            mobius_add(&pt(&[0.5, 0.0]), &pt(&[0.25, 0.0])).unwrap().coords(),
            &[0.6666666666666666, 0.0],
            1e-15,
        );
        assert_vec_close(
            mobius_add(&pt(&[0.3, -0.4]), &pt(&[-0.1, 0.5])).unwrap().coords(),
            &[0.2727272727272727, 0.09090909090909081],
            1e-15,
        );
        assert_vec_close(
            mobius_add(&pt(&[0.2, 0.1, -0.3]), &pt(&[0.4, -0.2, 0.1])).unwrap().coords(),
            &[0.548926014319809, -0.04130714154580504, -0.2707912612447218],
            1e-15,
        );
    }

    #[test]
    fn mobius_scalar_known_values() {
        assert_vec_close(
            mobius_scalar_mul(2.0, &pt(&[0.5, 0.0])).coords(),
            &[0.7999999999999999, 0.0],
            1e-15,
        );
        assert_vec_close(
            mobius_scalar_mul(0.5, &pt(&[0.3, -0.4])).coords(),
            &[0.1607695154586736, -0.21435935394489816],
            1e-15,
        );
        assert_vec_close(
            mobius_scalar_mul(-1.5, &pt(&[0.2, 0.3])).coords(),
            &[-0.2843539063068435, -0.4265308594602652],
            1e-15,
        );
        assert!(mobius_scalar_mul(3.0, &pt(&[0.0, 0.0])).is_origin());
    }

    #[test]
    fn distance_known_values() {
        assert_close(
            distance(&pt(&[0.0, 0.0]), &pt(&[0.5, 0.0])).unwrap(),
            1.0986122886681096,
            1e-12,
        );
        assert_close(
            distance(&pt(&[0.3, -0.4]), &pt(&[-0.1, 0.5])).unwrap(),
            2.1836165788126842,
            1e-12,
        );
        assert_eq!(distance(&pt(&[0.3, 0.1]), &pt(&[0.3, 0.1])).unwrap(), 0.0);
    }

    #[test]
    fn exp_log_known_values() {
        let p = pt(&[0.3, 0.1]);
        let v = tv(&p, &[0.2, -0.05]);
        let x = exp_map(&p, &v).unwrap();
        assert_vec_close(x.coords(), &[0.4868644964093848, 0.06037879969552333], 1e-14);
        let back = log_map(&p, &x).unwrap();
        assert_vec_close(back.components(), &[0.2, -0.05], 1e-12);
        assert_vec_close(
            log_map(&pt(&[0.0, 0.0]), &pt(&[0.6, 0.0])).unwrap().components(),
            &[std::f64::consts::LN_2, 0.0],
            1e-15,
        );
    }

    #[test]
    fn geodesic_known_values() {
        let x = pt(&[-0.5, 0.0]);
        let y = pt(&[0.5, 0.0]);
        assert_vec_close(
            geodesic_point(&x, &y, 0.25).unwrap().coords(),
            &[-0.2679491924311227, 0.0],
            1e-14,
        );
        let a = pt(&[0.3, -0.4]);
        let b = pt(&[-0.1, 0.5]);
        let mid = geodesic_point(&a, &b, 0.5).unwrap();
        assert_vec_close(mid.coords(), &[0.07924586345986635, 0.042587913015846815], 1e-14);
        let da = distance(&a, &mid).unwrap();
        let db = distance(&b, &mid).unwrap();
        assert_close(da, db, 1e-11);
    }

    #[test]
    fn hyperplane_distance_known_values() {
        let origin = pt(&[0.0, 0.0]);
        let h = Hyperplane::from_components(origin, vec![1.0, 0.0]).unwrap();
        assert_close(dist_to_hyperplane(&pt(&[0.5, 0.0]), &h).unwrap(), 1.0986122886681096, 1e-12);

        let p = pt(&[0.1, 0.2]);
        let h2 = Hyperplane::from_components(p.clone(), vec![2.0, -1.0]).unwrap();
        let x = pt(&[0.3, -0.4]);
        assert_close(dist_to_hyperplane(&x, &h2).unwrap(), 1.0112075950634174, 1e-12);
        let v = log_map(&p, &x).unwrap();
        assert_vec_close(v.components(), &[0.14794269161202486, -0.6410849969854411], 1e-14);
        assert_close(dist_to_hyperplane_tangent(&v, &h2).unwrap(), 1.0112075950634174, 1e-11);
        assert_close(eta_weight(&v, &p).unwrap(), 2.8460522584187187, 1e-12);
    }

    #[test]
    fn eta_known_values() {
        let origin = pt(&[0.0, 0.0]);
        let v = tv(&origin, &[0.5, 0.0]);
        assert_close(eta_weight(&v, &origin).unwrap(), 2.3504023872876028, 1e-12);
        assert_eq!(eta_weight(&TangentVector::zero(origin.clone()), &origin).unwrap(), 0.0);
    }

    #[test]
    fn identity_inverse_cancellation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let d = 2 + (rng.gen::<u64>() % 4) as usize * 2;
            let x = rand_point(&mut rng, d, 0.99);
            let y = rand_point(&mut rng, d, 0.99);
            let zero = PoincarePoint::origin(d);

            let idl = mobius_add(&zero, &x).unwrap();
            assert_vec_close(idl.coords(), x.coords(), 1e-12);
            let idr = mobius_add(&x, &zero).unwrap();
            assert_vec_close(idr.coords(), x.coords(), 1e-12);

            let inv = mobius_add(&x.neg(), &x).unwrap();
            assert!(inv.norm() <= 1e-12);

            let sum = mobius_add(&x, &y).unwrap();
            let cancel = mobius_add(&x.neg(), &sum).unwrap();
            assert_vec_close(cancel.coords(), y.coords(), 1e-12);
        }
    }

    #[test]
    fn exp_log_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let d = 2 + (rng.gen::<u64>() % 5) as usize;
            let p = rand_point(&mut rng, d, 0.9);
            let x = rand_point(&mut rng, d, 0.95);
            let v = log_map(&p, &x).unwrap();
            let back = exp_map(&p, &v).unwrap();
            for (a, b) in back.coords().iter().zip(x.coords()) {
                assert!(rel_close(*a, *b, 1e-9), "{a} vs {b}");
            }
            let v2 = log_map(&p, &back).unwrap();
            for (a, b) in v2.components().iter().zip(v.components()) {
                assert!(rel_close(*a, *b, 1e-9));
            }
        }
    }

    #[test]
    fn metric_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..1000 {
            let d = 2 + (rng.gen::<u64>() % 4) as usize;
            let x = rand_point(&mut rng, d, 0.95);
            let y = rand_point(&mut rng, d, 0.95);
            let z = rand_point(&mut rng, d, 0.95);
            let dxy = distance(&x, &y).unwrap();
            let dyx = distance(&y, &x).unwrap();
            assert_close(dxy, dyx, 1e-12);
            assert!(dxy >= 0.0);
            let dxz = distance(&x, &z).unwrap();
            let dzy = distance(&z, &y).unwrap();
            assert!(dxy <= dxz + dzy + 1e-12);
        }
    }

    #[test]
    fn geodesic_endpoints_and_constant_speed() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..500 {
            let d = 2 + (rng.gen::<u64>() % 3) as usize;
            let x = rand_point(&mut rng, d, 0.9);
            let y = rand_point(&mut rng, d, 0.9);
            let g0 = geodesic_point(&x, &y, 0.0).unwrap();
            assert_vec_close(g0.coords(), x.coords(), 1e-12);
            let g1 = geodesic_point(&x, &y, 1.0).unwrap();
            assert_vec_close(g1.coords(), y.coords(), 1e-11);
            let t: f64 = rng.gen();
            let gt = geodesic_point(&x, &y, t).unwrap();
            let total = distance(&x, &y).unwrap();
            let part = distance(&x, &gt).unwrap();
            assert!(rel_close(part, t * total, 1e-9), "{part} vs {}", t * total);
        }
    }

    #[test]
    fn hyperplane_forms_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..1000 {
            let d = 2 + (rng.gen::<u64>() % 4) as usize;
            let p = rand_point(&mut rng, d, 0.9);
            let x = rand_point(&mut rng, d, 0.95);
            let w: Vec<f64> = (0..d).map(|_| StandardNormal.sample(&mut rng)).collect();
            if w.iter().map(|c| c * c).sum::<f64>() == 0.0 {
                continue;
            }
            let h = Hyperplane::from_components(p.clone(), w).unwrap();
            let direct = dist_to_hyperplane(&x, &h).unwrap();
            let v = log_map(&p, &x).unwrap();
            let tangent = dist_to_hyperplane_tangent(&v, &h).unwrap();
            assert!(rel_close(direct, tangent, 1e-9), "{direct} vs {tangent}");

            let eta = eta_weight(&v, &p).unwrap();
            let wn = h.normal().norm();
            let via_eta =
                (eta * dot(v.components(), h.normal().components()).abs() / wn).asinh();
            assert!(rel_close(direct, via_eta, 1e-9));
        }
    }

    #[test]
    fn hyperplane_scale_and_sign() {
        let p = pt(&[0.1, -0.3]);
        let x = pt(&[0.4, 0.2]);
        let h1 = Hyperplane::from_components(p.clone(), vec![0.7, 0.4]).unwrap();
        let h7 = Hyperplane::from_components(p.clone(), vec![4.9, 2.8]).unwrap();
        let hneg = Hyperplane::from_components(p.clone(), vec![-0.7, -0.4]).unwrap();
        assert_close(
            dist_to_hyperplane(&x, &h1).unwrap(),
            dist_to_hyperplane(&x, &h7).unwrap(),
            1e-12,
        );
        assert_eq!(
            hyperplane_side(&x, &h1).unwrap(),
            -hyperplane_side(&x, &hneg).unwrap()
        );
        assert_eq!(hyperplane_side(&p, &h1).unwrap(), 0);
        assert_close(dist_to_hyperplane(&p, &h1).unwrap(), 0.0, 1e-15);
    }

    #[test]
    fn mobius_norm_bound_is_tight() {
        // |a (+) b| over |b| <= r is maximized at b = r * a / |a|, where it
        // equals (|a| + r) / (1 + |a| r).
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let r = 0.8;
        for _ in 0..20 {
            let a = rand_point(&mut rng, 2, 0.9);
            let na = a.norm();
            let sup = (na + r) / (1.0 + na * r);
            let best = PoincarePoint::new(a.coords().iter().map(|c| c / na * r).collect()).unwrap();
            let attained = mobius_add(&a, &best).unwrap().norm();
            assert_close(attained, sup, 1e-12);
            let mut sampled_max: f64 = 0.0;
            for _ in 0..10_000 {
                let b = rand_point(&mut rng, 2, r);
                let n = mobius_add(&a, &b).unwrap().norm();
                assert!(n <= sup + 1e-12);
                sampled_max = sampled_max.max(n);
            }
            assert!(sup - sampled_max <= 1e-3, "gap {}", sup - sampled_max);
        }
    }

    #[test]
    fn outputs_stay_inside_ball() {
        let x = pt(&[0.9999999, 0.0]);
        let y = pt(&[0.0, 0.9999999]);
        let s = mobius_add(&x, &y).unwrap();
        assert!(s.norm() < 1.0);
        assert!(distance(&x, &y).unwrap().is_finite());
        let big = mobius_scalar_mul(1e6, &x);
        assert!(big.norm() < 1.0);
    }

    #[test]
    fn zero_conventions() {
        let p = pt(&[0.2, -0.1]);
        assert_eq!(exp_map(&p, &TangentVector::zero(p.clone())).unwrap(), p);
        let v = log_map(&p, &p).unwrap();
        assert!(v.components().iter().all(|c| *c == 0.0));
    }

    #[test]
    fn input_validation() {
        assert!(matches!(
            PoincarePoint::<f64>::new(vec![1.0, 0.0]),
            Err(Error::OutsideBall { .. })
        ));
        assert!(matches!(
            PoincarePoint::<f64>::new(vec![0.8, 0.8]),
            Err(Error::OutsideBall { .. })
        ));
        assert!(PoincarePoint::<f64>::new(vec![f64::NAN]).is_err());

        let x = pt(&[0.1, 0.2]);
        let y3 = pt(&[0.1, 0.2, 0.3]);
        assert!(matches!(
            mobius_add(&x, &y3),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(distance(&x, &y3).is_err());

        assert!(matches!(
            geodesic_point(&x, &pt(&[0.0, 0.0]), 1.5),
            Err(Error::InvalidArgument(_))
        ));
        assert!(geodesic_point(&x, &pt(&[0.0, 0.0]), -0.1).is_err());

        let other = pt(&[0.0, 0.5]);
        let v = tv(&other, &[0.1, 0.1]);
        assert!(matches!(exp_map(&x, &v), Err(Error::BaseMismatch)));

        assert!(matches!(
            Hyperplane::from_components(x.clone(), vec![0.0, 0.0]),
            Err(Error::ZeroNormal)
        ));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn ball_point(dim: usize, cap: f64) -> impl Strategy<Value = PoincarePoint<f64>> {
            prop::collection::vec(-1.0..1.0f64, dim).prop_map(move |raw| {
                let n = raw.iter().map(|c| c * c).sum::<f64>().sqrt();
                if n == 0.0 {
                    return PoincarePoint::origin(raw.len());
                }
                let r = cap * n.min(1.0);
                PoincarePoint::new(raw.iter().map(|c| c / n * r).collect()).unwrap()
            })
        }

        proptest! {
            #[test]
            fn left_cancellation(x in ball_point(3, 0.95), y in ball_point(3, 0.95)) {
                let sum = mobius_add(&x, &y).unwrap();
                let back = mobius_add(&x.neg(), &sum).unwrap();
                for (a, b) in back.coords().iter().zip(y.coords()) {
                    prop_assert!((a - b).abs() < 1e-10);
                }
            }

            #[test]
            fn distance_symmetry(x in ball_point(3, 0.95), y in ball_point(3, 0.95)) {
                let dxy = distance(&x, &y).unwrap();
                let dyx = distance(&y, &x).unwrap();
                prop_assert!((dxy - dyx).abs() < 1e-12);
            }

            #[test]
            fn side_matches_score_sign(x in ball_point(2, 0.95), p in ball_point(2, 0.9)) {
                let h = Hyperplane::from_components(p, vec![0.3, -0.8]).unwrap();
                let side = hyperplane_side(&x, &h).unwrap();
                let score = decision_score(&x, &h).unwrap();
                prop_assert_eq!(side, if score > 0.0 { 1 } else if score < 0.0 { -1 } else { 0 });
            }
        }
    }
}
