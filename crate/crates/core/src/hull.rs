//! Geodesic convex hulls in the two-dimensional ball and the reference-point
//! pipeline: per-class hulls, minimum-distance pair, geodesic midpoint.
//!
//! Side tests work in tangent coordinates: x lies left of the directed
//! geodesic P -> Q iff <rot90(log_m(Q)), log_m(x)> > 0 with m the geodesic
//! midpoint. Geodesics viewed in the embedding bow toward the origin, so
//! hull vertices differ from their straight-line counterparts; all tests and
//! pops therefore use tangent vectors, never raw chords.

use serde::{Deserialize, Serialize};

use crate::dataset::LabeledDataset;
use crate::error::{Error, Result};
use crate::geometry::{
    dist_to_hyperplane, distance, geodesic_point, log_map, Hyperplane, PoincarePoint,
};
use crate::scalar::Float;

/// Convex hull in the 2-D ball: vertices in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct ConvexHull2D<F: Float> {
    vertices: Vec<PoincarePoint<F>>,
}

impl<F: Float> ConvexHull2D<F> {
    pub fn vertices(&self) -> &[PoincarePoint<F>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// True when x passes the left-or-on side test for every directed edge.
    pub fn contains(&self, x: &PoincarePoint<F>) -> Result<bool> {
        if self.vertices.len() < 3 {
            return Ok(self.vertices.iter().any(|v| v == x));
        }
        let tol = -F::cast(1e-12);
        for (u, v) in edge_pairs(&self.vertices) {
            let lu_v = log_map(u, v)?;
            let lu_x = log_map(u, x)?;
            if cross2(lu_v.components(), lu_x.components()) < tol {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Closest pair of points across two sets.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct MinDistPair<F: Float> {
    pub a: PoincarePoint<F>,
    pub b: PoincarePoint<F>,
    pub dist: F,
}

fn edge_pairs<F: Float>(
    verts: &[PoincarePoint<F>],
) -> impl Iterator<Item = (&PoincarePoint<F>, &PoincarePoint<F>)> {
    let n = verts.len();
    (0..n).map(move |i| (&verts[i], &verts[(i + 1) % n]))
}

fn cross2<F: Float>(a: &[F], b: &[F]) -> F {
    a[0] * b[1] - a[1] * b[0]
}

fn rot90<F: Float>(v: &[F]) -> Vec<F> {
    vec![-v[1], v[0]]
}

fn check_planar<F: Float>(points: &[PoincarePoint<F>]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::EmptyDataset);
    }
    if let Some(p) = points.iter().find(|p| p.dim() != 2) {
        return Err(Error::DimensionMismatch { expected: 2, got: p.dim() });
    }
    Ok(())
}

fn dedup<F: Float>(points: &[PoincarePoint<F>]) -> Vec<PoincarePoint<F>> {
    let mut uniq: Vec<PoincarePoint<F>> = Vec::new();
    for p in points {
        if !uniq.iter().any(|q| q == p) {
            uniq.push(p.clone());
        }
    }
    uniq
}

/// Signed side of x relative to the directed geodesic P -> Q: positive on
/// the left. Evaluated at the geodesic midpoint.
fn side<F: Float>(
    p: &PoincarePoint<F>,
    q: &PoincarePoint<F>,
    x: &PoincarePoint<F>,
) -> Result<F> {
    let m = geodesic_point(p, q, F::cast(0.5))?;
    let w = rot90(log_map(&m, q)?.components());
    let v = log_map(&m, x)?;
    Ok(w[0] * v.components()[0] + w[1] * v.components()[1])
}

/// Anchor-and-sweep hull: anchor at the minimum-y point (ties by minimum x),
/// sort the rest by tangent angle at the anchor (ties by nearer tangent
/// norm), then scan a stack popping on strictly clockwise turns.
pub fn graham_scan<F: Float>(points: &[PoincarePoint<F>]) -> Result<ConvexHull2D<F>> {
    check_planar(points)?;
    let pts = dedup(points);
    if pts.len() < 3 {
        return Ok(ConvexHull2D { vertices: pts });
    }
    let anchor_idx = (0..pts.len())
        .min_by(|&i, &j| {
            let a = pts[i].coords();
            let b = pts[j].coords();
            (a[1], a[0]).partial_cmp(&(b[1], b[0])).unwrap()
        })
        .unwrap();
    let anchor = pts[anchor_idx].clone();
    let mut rest: Vec<(F, F, PoincarePoint<F>)> = Vec::with_capacity(pts.len() - 1);
    for (i, x) in pts.iter().enumerate() {
        if i == anchor_idx {
            continue;
        }
        let v = log_map(&anchor, x)?;
        let angle = v.components()[1].atan2(v.components()[0]);
        rest.push((angle, v.norm(), x.clone()));
    }
    rest.sort_by(|a, b| (a.0, a.1).partial_cmp(&(b.0, b.1)).unwrap());

    let mut stack: Vec<PoincarePoint<F>> = vec![anchor];
    for (_, _, x) in rest {
        while stack.len() >= 2 {
            let second = &stack[stack.len() - 2];
            let top = &stack[stack.len() - 1];
            let to_top = log_map(second, top)?;
            let to_x = log_map(second, &x)?;
            if cross2(to_top.components(), to_x.components()) < F::zero() {
                stack.pop();
            } else {
                break;
            }
        }
        stack.push(x);
    }
    Ok(ConvexHull2D { vertices: stack })
}

fn farthest_from_edge<F: Float>(
    set: &[PoincarePoint<F>],
    p: &PoincarePoint<F>,
    q: &PoincarePoint<F>,
) -> Result<usize> {
    // Distance to the geodesic through P and Q: the geodesic is itself a
    // hyperplane through the midpoint, so the tested primitive applies. The
    // maximizer of a distance to a convex set is always a hull vertex.
    let m = geodesic_point(p, q, F::cast(0.5))?;
    let w = rot90(log_map(&m, q)?.components());
    let h = Hyperplane::from_components(m, w)?;
    let mut best = 0usize;
    let mut best_val = F::neg_infinity();
    for (i, x) in set.iter().enumerate() {
        let d = dist_to_hyperplane(x, &h)?;
        if d > best_val {
            best_val = d;
            best = i;
        }
    }
    Ok(best)
}

fn find_hull<F: Float>(
    set: Vec<PoincarePoint<F>>,
    p: &PoincarePoint<F>,
    q: &PoincarePoint<F>,
) -> Result<Vec<PoincarePoint<F>>> {
    if set.is_empty() {
        return Ok(Vec::new());
    }
    let f_idx = farthest_from_edge(&set, p, q)?;
    let f = set[f_idx].clone();
    let mut outside_pf = Vec::new();
    let mut outside_fq = Vec::new();
    for (i, x) in set.into_iter().enumerate() {
        if i == f_idx {
            continue;
        }
        if side(p, &f, &x)? > F::zero() {
            outside_pf.push(x);
        } else if side(&f, q, &x)? > F::zero() {
            outside_fq.push(x);
        }
    }
    let mut chain = find_hull(outside_pf, p, &f)?;
    chain.push(f.clone());
    chain.extend(find_hull(outside_fq, &f, q)?);
    Ok(chain)
}

/// Divide-and-conquer hull: split by the geodesic through the extreme-x
/// points, recursively expand each side by its farthest point.
pub fn quickhull<F: Float>(points: &[PoincarePoint<F>]) -> Result<ConvexHull2D<F>> {
    check_planar(points)?;
    let pts = dedup(points);
    if pts.len() < 3 {
        return Ok(ConvexHull2D { vertices: pts });
    }
    let key = |p: &PoincarePoint<F>| (p.coords()[0], p.coords()[1]);
    let a = pts
        .iter()
        .min_by(|p, q| key(p).partial_cmp(&key(q)).unwrap())
        .unwrap()
        .clone();
    let b = pts
        .iter()
        .max_by(|p, q| key(p).partial_cmp(&key(q)).unwrap())
        .unwrap()
        .clone();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for x in &pts {
        if x == &a || x == &b {
            continue;
        }
        let s = side(&a, &b, x)?;
        if s > F::zero() {
            left.push(x.clone());
        } else if s < F::zero() {
            right.push(x.clone());
        }
    }
    let mut cycle = vec![a.clone()];
    cycle.extend(find_hull(left, &a, &b)?);
    cycle.push(b.clone());
    cycle.extend(find_hull(right, &b, &a)?);

    // Normalize to counterclockwise order starting at the minimum-y vertex.
    let n = cycle.len();
    let low = (0..n)
        .min_by(|&i, &j| {
            let u = cycle[i].coords();
            let v = cycle[j].coords();
            (u[1], u[0]).partial_cmp(&(v[1], v[0])).unwrap()
        })
        .unwrap();
    let next = log_map(&cycle[low], &cycle[(low + 1) % n])?;
    let prev = log_map(&cycle[low], &cycle[(low + n - 1) % n])?;
    let ccw = cross2(next.components(), prev.components()) > F::zero();
    let mut vertices = Vec::with_capacity(n);
    for k in 0..n {
        let idx = if ccw { (low + k) % n } else { (low + n - k) % n };
        vertices.push(cycle[idx].clone());
    }
    Ok(ConvexHull2D { vertices })
}

/// Exhaustive closest cross pair; ties keep the first (row-major) pair.
pub fn min_distance_pair<F: Float>(
    hull_plus: &[PoincarePoint<F>],
    hull_minus: &[PoincarePoint<F>],
) -> Result<MinDistPair<F>> {
    if hull_plus.is_empty() || hull_minus.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let mut best: Option<MinDistPair<F>> = None;
    for a in hull_plus {
        for b in hull_minus {
            let d = distance(a, b)?;
            if best.as_ref().is_none_or(|cur| d < cur.dist) {
                best = Some(MinDistPair { a: a.clone(), b: b.clone(), dist: d });
            }
        }
    }
    Ok(best.unwrap())
}

/// Geodesic midpoint of the pair.
pub fn reference_midpoint<F: Float>(pair: &MinDistPair<F>) -> Result<PoincarePoint<F>> {
    if pair.a == pair.b {
        return Ok(pair.a.clone());
    }
    geodesic_point(&pair.a, &pair.b, F::cast(0.5))
}

/// Upper bound on per-class candidates in the non-planar fallback search.
const PAIR_SEARCH_CAP: usize = 2000;

fn capped<F: Float>(points: Vec<PoincarePoint<F>>) -> Vec<PoincarePoint<F>> {
    if points.len() <= PAIR_SEARCH_CAP {
        return points;
    }
    let stride = points.len().div_ceil(PAIR_SEARCH_CAP);
    points.into_iter().step_by(stride).collect()
}

/// Learns a reference point for a binary dataset: the geodesic midpoint of
/// the closest pair between the classes. In two dimensions the pair search
/// runs over hull vertices; otherwise over (capped) raw cross pairs.
pub fn learn_reference_point<F: Float>(ds: &LabeledDataset<F>) -> Result<PoincarePoint<F>> {
    ds.require_binary()?;
    let plus = ds.points_with_label(1);
    let minus = ds.points_with_label(-1);
    if plus.is_empty() {
        return Err(Error::EmptyClass(1));
    }
    if minus.is_empty() {
        return Err(Error::EmptyClass(-1));
    }
    let pair = if ds.dim() == 2 {
        let hp = graham_scan(&plus)?;
        let hm = graham_scan(&minus)?;
        min_distance_pair(hp.vertices(), hm.vertices())?
    } else {
        min_distance_pair(&capped(plus), &capped(minus))?
    };
    reference_midpoint(&pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifiers::perceptron::perceptron_train;
    use crate::geometry::{exp_map, hyperplane_side, Hyperplane, TangentVector};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(coords: &[f64]) -> PoincarePoint<f64> {
        PoincarePoint::new(coords.to_vec()).unwrap()
    }

    fn pts(coords: &[[f64; 2]]) -> Vec<PoincarePoint<f64>> {
        coords.iter().map(|c| pt(c)).collect()
    }

    fn vertex_indices(hull: &ConvexHull2D<f64>, input: &[PoincarePoint<f64>]) -> Vec<usize> {
        let mut idx: Vec<usize> = hull
            .vertices()
            .iter()
            .map(|v| input.iter().position(|p| p == v).unwrap())
            .collect();
        idx.sort_unstable();
        idx
    }

    fn ten_point_instance() -> Vec<PoincarePoint<f64>> {
        pts(&[
            [0.1, 0.1],
            [0.7, 0.2],
            [-0.5, 0.6],
            [0.0, -0.6],
            [0.3, 0.4],
            [-0.2, -0.1],
            [0.55, -0.35],
            [-0.6, -0.3],
            [0.05, 0.75],
            [0.35, 0.05],
        ])
    }

    fn rand_points(rng: &mut ChaCha8Rng, n: usize, cap: f64) -> Vec<PoincarePoint<f64>> {
        (0..n)
            .map(|_| {
                let angle = rng.gen::<f64>() * std::f64::consts::TAU;
                let r = cap * rng.gen::<f64>().sqrt();
                pt(&[r * angle.cos(), r * angle.sin()])
            })
            .collect()
    }

    #[test]
    fn reference_instance_vertices() {
        let input = ten_point_instance();
        let g = graham_scan(&input).unwrap();
        let q = quickhull(&input).unwrap();
        let expect = vec![1, 2, 3, 4, 6, 7, 8];
        assert_eq!(vertex_indices(&g, &input), expect);
        assert_eq!(vertex_indices(&q, &input), expect);
        // Same counterclockwise cycle, same canonical starting vertex.
        assert_eq!(g.vertices(), q.vertices());
    }

    #[test]
    fn small_inputs_returned_verbatim() {
        let two = pts(&[[0.1, 0.2], [-0.3, 0.1]]);
        assert_eq!(graham_scan(&two).unwrap().vertices(), two.as_slice());
        assert_eq!(quickhull(&two).unwrap().vertices(), two.as_slice());
        let one = pts(&[[0.4, -0.2]]);
        assert_eq!(graham_scan(&one).unwrap().vertices(), one.as_slice());
        let tri = pts(&[[0.2, 0.1], [-0.3, 0.2], [0.0, -0.4]]);
        assert_eq!(graham_scan(&tri).unwrap().len(), 3);
        assert_eq!(quickhull(&tri).unwrap().len(), 3);
    }

    #[test]
    fn duplicates_are_removed_first() {
        let input = pts(&[[0.1, 0.2], [0.1, 0.2], [0.1, 0.2]]);
        assert_eq!(graham_scan(&input).unwrap().len(), 1);
        let mut twice = ten_point_instance();
        twice.extend(ten_point_instance());
        let g = graham_scan(&twice).unwrap();
        assert_eq!(vertex_indices(&g, &ten_point_instance()), vec![1, 2, 3, 4, 6, 7, 8]);
    }

    #[test]
    fn circle_center_is_excluded() {
        let center = pt(&[0.3, 0.1]);
        let mut input = vec![center.clone()];
        for k in 0..12 {
            let theta = std::f64::consts::TAU * k as f64 / 12.0;
            let v = TangentVector::new(center.clone(), vec![0.5 * theta.cos(), 0.5 * theta.sin()])
                .unwrap();
            input.push(exp_map(&center, &v).unwrap());
        }
        for hull in [graham_scan(&input).unwrap(), quickhull(&input).unwrap()] {
            assert_eq!(hull.len(), 12);
            assert!(!hull.vertices().contains(&center));
            assert!(hull.contains(&center).unwrap());
        }
    }

    #[test]
    fn straight_interior_point_can_be_a_vertex() {
        // The geodesic between the two bottom points bows up toward the
        // origin, rising to y = -0.448 at x = 0. The point at (0, -0.48)
        // sits below that arc: a hull vertex here even though it is inside
        // the straight-line triangle of the other three.
        let input = pts(&[[-0.3, -0.5], [0.3, -0.5], [0.0, -0.2], [0.0, -0.48]]);
        for hull in [graham_scan(&input).unwrap(), quickhull(&input).unwrap()] {
            assert_eq!(hull.len(), 4, "{:?}", hull.vertices());
            assert!(hull.vertices().contains(&input[3]));
        }
    }

    #[test]
    fn random_instances_agree_and_contain_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for case in 0..100 {
            let input = rand_points(&mut rng, 30, 0.85);
            let g = graham_scan(&input).unwrap();
            let q = quickhull(&input).unwrap();
            assert_eq!(
                vertex_indices(&g, &input),
                vertex_indices(&q, &input),
                "case {case}"
            );
            for x in &input {
                assert!(g.contains(x).unwrap(), "case {case}: point outside hull");
            }
            // Idempotence: rebuilding from the vertices changes nothing.
            let again = graham_scan(g.vertices()).unwrap();
            assert_eq!(again.vertices(), g.vertices(), "case {case}");
        }
    }

    #[test]
    fn separating_hull_vertices_separates_everything() {
        // Two angular clusters; any hyperplane that strictly separates the
        // hull vertex sets must separate the full clusters.
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let mut left = Vec::new();
        let mut right = Vec::new();
        for _ in 0..40 {
            let r = 0.3 + 0.4 * rng.gen::<f64>();
            let ang = (rng.gen::<f64>() - 0.5) * 1.0;
            right.push(pt(&[r * ang.cos(), r * ang.sin()]));
            let r = 0.3 + 0.4 * rng.gen::<f64>();
            let ang = (rng.gen::<f64>() - 0.5) * 1.0 + std::f64::consts::PI;
            left.push(pt(&[r * ang.cos(), r * ang.sin()]));
        }
        let hr = graham_scan(&right).unwrap();
        let hl = graham_scan(&left).unwrap();
        let mut tested = 0;
        while tested < 20 {
            let p = pt(&[0.0, (rng.gen::<f64>() - 0.5) * 0.2]);
            let w = vec![1.0 + rng.gen::<f64>(), (rng.gen::<f64>() - 0.5) * 0.4];
            let h = Hyperplane::from_components(p, w).unwrap();
            let vertex_sides_ok = hr
                .vertices()
                .iter()
                .all(|x| hyperplane_side(x, &h).unwrap() == 1)
                && hl.vertices().iter().all(|x| hyperplane_side(x, &h).unwrap() == -1);
            if !vertex_sides_ok {
                continue;
            }
            tested += 1;
            for x in &right {
                assert_eq!(hyperplane_side(x, &h).unwrap(), 1);
            }
            for x in &left {
                assert_eq!(hyperplane_side(x, &h).unwrap(), -1);
            }
        }
    }

    /// Every edge side score of `x` is strictly positive: `x` lies in the
    /// open interior of the hull, clear of any roundoff band.
    fn strictly_inside(hull: &ConvexHull2D<f64>, x: &PoincarePoint<f64>) -> bool {
        let vs = hull.vertices();
        let k = vs.len();
        (0..k).all(|i| side(&vs[i], &vs[(i + 1) % k], x).unwrap() > 1e-9)
    }

    #[test]
    fn full_set_minimum_pair_usually_lands_on_hull_vertices() {
        // The vertex-restricted pair can only be farther apart than the
        // full-set pair. The endpoints coincide with hull vertices in the
        // typical case, but not always: a point just behind a long facing
        // edge can sit closer to the other class than every vertex of its
        // own hull. Such exceptions must be genuine interior wins; a
        // boundary point missing from the hull would be a scan bug.
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let mut on_vertices = 0;
        for _ in 0..25 {
            let plus: Vec<_> = rand_points(&mut rng, 15, 0.4)
                .into_iter()
                .map(|p| pt(&[p.coords()[0] + 0.5, p.coords()[1]]))
                .collect();
            let minus: Vec<_> = rand_points(&mut rng, 15, 0.4)
                .into_iter()
                .map(|p| pt(&[p.coords()[0] - 0.5, p.coords()[1]]))
                .collect();
            let full = min_distance_pair(&plus, &minus).unwrap();
            let hp = graham_scan(&plus).unwrap();
            let hm = graham_scan(&minus).unwrap();
            let hull_pair = min_distance_pair(hp.vertices(), hm.vertices()).unwrap();
            assert!(hull_pair.dist >= full.dist);
            let a_on = hp.vertices().contains(&full.a);
            let b_on = hm.vertices().contains(&full.b);
            if a_on && b_on {
                assert_eq!(hull_pair.dist, full.dist);
                on_vertices += 1;
            } else {
                if !a_on {
                    assert!(strictly_inside(&hp, &full.a));
                }
                if !b_on {
                    assert!(strictly_inside(&hm, &full.b));
                }
                assert!(hull_pair.dist > full.dist);
            }
        }
        assert!(on_vertices >= 20, "only {on_vertices}/25 on vertices");
    }

    #[test]
    fn min_distance_pair_reference_case() {
        let ca = pts(&[[0.5, 0.1], [0.6, 0.2], [0.55, -0.05]]);
        let cb = pts(&[[-0.4, -0.1], [-0.5, 0.05], [-0.45, 0.2]]);
        let pair = min_distance_pair(&ca, &cb).unwrap();
        assert_eq!(pair.a, ca[0]);
        assert_eq!(pair.b, cb[0]);
        assert!((pair.dist - 2.0015517129762026).abs() < 1e-12);
        let mid = reference_midpoint(&pair).unwrap();
        assert!((mid.coords()[0] - 0.06249604702399415).abs() < 1e-13);
        assert!((mid.coords()[1] - 0.004726591791730671).abs() < 1e-13);
        let da = distance(&pair.a, &mid).unwrap();
        let db = distance(&pair.b, &mid).unwrap();
        assert!((da - db).abs() < 1e-9);
    }

    #[test]
    fn midpoint_edge_cases() {
        let a = pt(&[0.3, -0.2]);
        let same = MinDistPair { a: a.clone(), b: a.clone(), dist: 0.0 };
        assert_eq!(reference_midpoint(&same).unwrap(), a);
        let sym = MinDistPair { a: pt(&[0.6, 0.0]), b: pt(&[-0.6, 0.0]), dist: 0.0 };
        let mid = reference_midpoint(&sym).unwrap();
        assert!(mid.norm() < 1e-12);
        assert!(min_distance_pair::<f64>(&[], &[pt(&[0.0, 0.0])]).is_err());
    }

    #[test]
    fn learned_reference_point_enables_convergence() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        let mut points = Vec::new();
        let mut labels = Vec::new();
        for _ in 0..30 {
            let r = 0.2 + 0.3 * rng.gen::<f64>();
            let ang = (rng.gen::<f64>() - 0.5) * 0.8;
            points.push(pt(&[0.3 + r * ang.cos() * 0.5, 0.3 + r * ang.sin() * 0.5]));
            labels.push(1);
            points.push(pt(&[-0.3 - r * ang.cos() * 0.5, -0.2 - r * ang.sin() * 0.5]));
            labels.push(-1);
        }
        let ds = LabeledDataset::new(points, labels).unwrap();
        let p = learn_reference_point(&ds).unwrap();
        assert_eq!(p.dim(), 2);
        let model = perceptron_train(&ds, &p, 10_000).unwrap();
        assert!(model.converged());
    }

    #[test]
    fn symmetric_singletons_give_center() {
        let ds = LabeledDataset::new(pts(&[[0.5, 0.0], [-0.5, 0.0]]), vec![1, -1]).unwrap();
        let p = learn_reference_point(&ds).unwrap();
        assert!(p.norm() < 1e-12);
    }

    #[test]
    fn higher_dimension_uses_direct_pair_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let mut points = Vec::new();
        let mut labels = Vec::new();
        for _ in 0..50 {
            let mut c: Vec<f64> = (0..5).map(|_| (rng.gen::<f64>() - 0.5) * 0.2).collect();
            c[0] += 0.4;
            points.push(pt(&c));
            labels.push(1);
            let mut c: Vec<f64> = (0..5).map(|_| (rng.gen::<f64>() - 0.5) * 0.2).collect();
            c[0] -= 0.4;
            points.push(pt(&c));
            labels.push(-1);
        }
        let ds = LabeledDataset::new(points.clone(), labels).unwrap();
        let p = learn_reference_point(&ds).unwrap();
        assert_eq!(p.dim(), 5);

        // The learned point must match a brute-force recomputation.
        let plus: Vec<_> = points.iter().step_by(2).cloned().collect();
        let minus: Vec<_> = points.iter().skip(1).step_by(2).cloned().collect();
        let pair = min_distance_pair(&plus, &minus).unwrap();
        let mid = reference_midpoint(&pair).unwrap();
        assert_eq!(p, mid);
    }

    #[test]
    fn missing_class_is_reported() {
        let ds = LabeledDataset::new(pts(&[[0.1, 0.0], [0.2, 0.0]]), vec![1, 1]).unwrap();
        assert!(matches!(
            learn_reference_point(&ds),
            Err(Error::EmptyClass(-1))
        ));
    }

}
