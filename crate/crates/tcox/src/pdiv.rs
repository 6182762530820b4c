//! Polyhedral divisors and divisorial fans on the projective line:
//! evaluation, degree, the properness and face criteria, fan validation,
//! slices with vertex indices and extremal data, and dimensions of graded
//! pieces of the section ring.

use crate::polyhedra::{vertex_index, Cone, SigmaPolyhedron};
use crate::projline::P1Point;
use crate::util::{dot_i, dot_iq, to_rat_vec};
use crate::{Error, Int, Rat, Result};
use num_traits::{Signed, Zero};

/// A polyhedral divisor on the projective line: a pointed tail cone and
/// finitely many sigma-polyhedron coefficients at marked points. Unlisted
/// points implicitly carry the tail cone itself; listed coefficients equal
/// to the tail are dropped at construction, so the stored support is exactly
/// the set of points with non-trivial coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyhedralDivisorP1 {
    dim: usize,
    tail: Cone,
    coefficients: Vec<(P1Point, SigmaPolyhedron)>,
}

impl PolyhedralDivisorP1 {
    pub fn new(
        dim: usize,
        tail: Cone,
        coefficients: Vec<(P1Point, SigmaPolyhedron)>,
    ) -> Result<Self> {
        if tail.ambient_rank() != dim {
            return Err(Error::AmbientMismatch(tail.ambient_rank(), dim));
        }
        if !tail.is_pointed() {
            return Err(Error::TailNotPointed);
        }
        let tail_poly = SigmaPolyhedron::cone_as_polyhedron(&tail)?;
        let mut kept: Vec<(P1Point, SigmaPolyhedron)> = Vec::new();
        for (point, coeff) in coefficients {
            if coeff.ambient_rank() != dim {
                return Err(Error::AmbientMismatch(coeff.ambient_rank(), dim));
            }
            if let Some(t) = coeff.tail() {
                if *t != tail {
                    return Err(Error::TailMismatch);
                }
            }
            if kept.iter().any(|(p, _)| p.same_point(&point)) {
                return Err(Error::DegeneratePoints(format!(
                    "point {point} listed twice in one divisor"
                )));
            }
            if coeff != tail_poly {
                kept.push((point, coeff));
            }
        }
        kept.sort_by(|(p, _), (q, _)| p.cmp(q));
        Ok(PolyhedralDivisorP1 { dim, tail, coefficients: kept })
    }

    /// The divisor with every coefficient equal to the tail cone.
    pub fn trivial(tail: Cone) -> Self {
        let dim = tail.ambient_rank();
        PolyhedralDivisorP1::new(dim, tail, Vec::new()).expect("trivial divisor")
    }

    pub fn ambient_rank(&self) -> usize {
        self.dim
    }

    pub fn tail(&self) -> &Cone {
        &self.tail
    }

    /// The stored (non-trivial) coefficients in canonical point order.
    pub fn support(&self) -> &[(P1Point, SigmaPolyhedron)] {
        &self.coefficients
    }

    fn tail_poly(&self) -> SigmaPolyhedron {
        SigmaPolyhedron::cone_as_polyhedron(&self.tail).expect("pointed tail")
    }

    /// The slice at a point: the stored coefficient, or the tail cone.
    pub fn slice_at(&self, point: &P1Point) -> SigmaPolyhedron {
        self.coefficients
            .iter()
            .find(|(p, _)| p.same_point(point))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.tail_poly())
    }

    pub fn has_empty_coefficient(&self) -> bool {
        self.coefficients.iter().any(|(_, c)| c.is_empty())
    }

    /// Evaluation at a weight in the dual tail cone: the rational divisor
    /// whose coefficient at each marked point is the support minimum of the
    /// slice there. Points with trivial coefficient contribute zero and are
    /// omitted; empty coefficients mark removed loci and are skipped.
    pub fn evaluate(&self, u: &[Rat]) -> Result<Vec<(P1Point, Rat)>> {
        for g in self.tail.generators() {
            if dot_iq(&g, u).is_negative() {
                return Err(Error::UnboundedBelow);
            }
        }
        let mut out = Vec::new();
        for (p, c) in &self.coefficients {
            if c.is_empty() {
                continue;
            }
            out.push((p.clone(), c.support_min(u)?));
        }
        Ok(out)
    }

    /// Minkowski sum of all coefficients (every point of the line has
    /// degree one). Empty if any coefficient is empty.
    pub fn degree(&self) -> SigmaPolyhedron {
        let mut acc = self.tail_poly();
        for (_, c) in &self.coefficients {
            acc = acc.minkowski_sum(c).expect("coefficients share the tail");
        }
        acc
    }

    /// The sufficient properness criterion on the line: the degree is a
    /// proper subset of the tail cone. Divisors with an empty coefficient
    /// have empty degree and pass by convention.
    pub fn is_proper_p1(&self) -> bool {
        let deg = self.degree();
        if deg.is_empty() {
            return true;
        }
        let tail_poly = self.tail_poly();
        tail_poly.contains_poly(&deg) && deg != tail_poly
    }

    /// Dimension of the graded piece of the section ring at weight `u`:
    /// one plus the degree of the rounded-down evaluation, clamped at zero.
    pub fn graded_piece_dim(&self, u: &[Rat]) -> Result<Int> {
        if self.has_empty_coefficient() {
            return Err(Error::NonCompleteLocus);
        }
        let eval = self.evaluate(u)?;
        let sum: Int = eval.iter().map(|(_, q)| q.floor().to_integer()).sum();
        let dim = sum + Int::from(1);
        Ok(if dim.is_negative() { Int::zero() } else { dim })
    }
}

/// The face relation between polyhedral divisors on the line: slice-wise
/// faces at every point together with the degree condition
/// `deg(d) n tail(dp) = deg(dp)`.
pub fn is_face_pdiv(dp: &PolyhedralDivisorP1, d: &PolyhedralDivisorP1) -> Result<bool> {
    if dp.ambient_rank() != d.ambient_rank() {
        return Err(Error::AmbientMismatch(dp.ambient_rank(), d.ambient_rank()));
    }
    // slices at the joint support, plus the generic slice (the tails)
    let mut points: Vec<P1Point> = Vec::new();
    for (p, _) in dp.support().iter().chain(d.support()) {
        if !points.iter().any(|q| q.same_point(p)) {
            points.push(p.clone());
        }
    }
    for p in &points {
        if !SigmaPolyhedron::is_face(&dp.slice_at(p), &d.slice_at(p)) {
            return Ok(false);
        }
    }
    let tail_dp = SigmaPolyhedron::cone_as_polyhedron(dp.tail())?;
    let tail_d = SigmaPolyhedron::cone_as_polyhedron(d.tail())?;
    if !SigmaPolyhedron::is_face(&tail_dp, &tail_d) {
        return Ok(false);
    }
    let meet = d.degree().intersect(&tail_dp)?;
    Ok(meet == dp.degree())
}

/// Coefficient-wise intersection of two divisors; the common tail is the
/// intersection of the tails.
pub fn intersect_pdiv(
    a: &PolyhedralDivisorP1,
    b: &PolyhedralDivisorP1,
) -> Result<PolyhedralDivisorP1> {
    if a.ambient_rank() != b.ambient_rank() {
        return Err(Error::AmbientMismatch(a.ambient_rank(), b.ambient_rank()));
    }
    let tail = a.tail().intersect(b.tail());
    let mut points: Vec<P1Point> = Vec::new();
    for (p, _) in a.support().iter().chain(b.support()) {
        if !points.iter().any(|q| q.same_point(p)) {
            points.push(p.clone());
        }
    }
    let mut coeffs = Vec::new();
    for p in points {
        let meet = a.slice_at(&p).intersect(&b.slice_at(&p))?;
        coeffs.push((p, meet));
    }
    PolyhedralDivisorP1::new(a.ambient_rank(), tail, coeffs)
}

/// A collection of polyhedral divisors on the line, canonically ordered.
#[derive(Debug, Clone)]
pub struct DivisorialFanP1 {
    dim: usize,
    divisors: Vec<PolyhedralDivisorP1>,
}

/// Outcome of [`DivisorialFanP1::check_fan`]: face failures by divisor pair,
/// and completeness per marked point and for the generic (tail) slice.
#[derive(Debug, Clone)]
pub struct ValidityReport {
    pub valid: bool,
    pub complete: bool,
    pub pair_failures: Vec<(usize, usize, String)>,
    pub point_completeness: Vec<(P1Point, bool)>,
    pub tail_fan_complete: bool,
}

/// Slice data of a fan: vertices with their indices per marked point, and
/// the tail-fan rays with extremality flags.
#[derive(Debug, Clone)]
pub struct SliceData {
    pub points: Vec<PointSlice>,
    pub rays: Vec<RaySlice>,
}

#[derive(Debug, Clone)]
pub struct PointSlice {
    pub point: P1Point,
    /// `(vertex, index mu(v), extremal)`; on the line every vertex is extremal.
    pub vertices: Vec<(Vec<Rat>, Int, bool)>,
}

#[derive(Debug, Clone)]
pub struct RaySlice {
    pub ray: Vec<Int>,
    pub extremal: bool,
}

impl DivisorialFanP1 {
    pub fn new(divisors: Vec<PolyhedralDivisorP1>) -> Result<Self> {
        let Some(first) = divisors.first() else {
            return Err(Error::InvalidFan("a divisorial fan needs at least one divisor".into()));
        };
        let dim = first.ambient_rank();
        for d in &divisors {
            if d.ambient_rank() != dim {
                return Err(Error::AmbientMismatch(d.ambient_rank(), dim));
            }
        }
        // canonical order, so reports and labels do not depend on input order
        let mut divisors = divisors;
        divisors.sort_by_key(|d| format!("{d:?}"));
        Ok(DivisorialFanP1 { dim, divisors })
    }

    pub fn ambient_rank(&self) -> usize {
        self.dim
    }

    pub fn divisors(&self) -> &[PolyhedralDivisorP1] {
        &self.divisors
    }

    /// All points carrying a listed coefficient in some divisor (including
    /// empty ones), in canonical order.
    pub fn support_points(&self) -> Vec<P1Point> {
        let mut points: Vec<P1Point> = Vec::new();
        for d in &self.divisors {
            for (p, _) in d.support() {
                if !points.iter().any(|q| q.same_point(p)) {
                    points.push(p.clone());
                }
            }
        }
        points.sort();
        points
    }

    /// Points with a non-trivial slice: some divisor carries a non-empty
    /// coefficient different from its tail there. Empty coefficients mark
    /// removed loci and do not make a slice non-trivial on their own.
    pub fn marked_points(&self) -> Vec<P1Point> {
        let mut points: Vec<P1Point> = Vec::new();
        for d in &self.divisors {
            for (p, c) in d.support() {
                if !c.is_empty() && !points.iter().any(|q| q.same_point(p)) {
                    points.push(p.clone());
                }
            }
        }
        points.sort();
        points
    }

    /// Pairwise face conditions and completeness of every slice.
    pub fn check_fan(&self) -> ValidityReport {
        let mut pair_failures = Vec::new();
        for i in 0..self.divisors.len() {
            for j in i + 1..self.divisors.len() {
                let (a, b) = (&self.divisors[i], &self.divisors[j]);
                match intersect_pdiv(a, b) {
                    Ok(meet) => {
                        let fa = is_face_pdiv(&meet, a).unwrap_or(false);
                        let fb = is_face_pdiv(&meet, b).unwrap_or(false);
                        if !fa || !fb {
                            pair_failures.push((
                                i,
                                j,
                                format!(
                                    "intersection is not a face of divisor {}",
                                    if fa { j } else { i }
                                ),
                            ));
                        }
                    }
                    Err(e) => pair_failures.push((i, j, e.to_string())),
                }
            }
        }
        let mut point_completeness = Vec::new();
        for p in self.support_points() {
            let cells: Vec<SigmaPolyhedron> =
                self.divisors.iter().map(|d| d.slice_at(&p)).collect();
            point_completeness.push((p, complete_subdivision(self.dim, &cells)));
        }
        let tail_cells: Vec<SigmaPolyhedron> = self
            .divisors
            .iter()
            .map(|d| SigmaPolyhedron::cone_as_polyhedron(d.tail()).expect("pointed tail"))
            .collect();
        let tail_fan_complete = complete_subdivision(self.dim, &tail_cells);
        let valid = pair_failures.is_empty();
        let complete = valid && tail_fan_complete && point_completeness.iter().all(|(_, ok)| *ok);
        ValidityReport { valid, complete, pair_failures, point_completeness, tail_fan_complete }
    }

    /// Vertices with indices per marked point, tail rays with extremality.
    /// On the line every slice vertex is extremal; a tail ray is extremal
    /// iff it avoids the degree of some divisor whose tail contains it.
    pub fn slices(&self) -> SliceData {
        let mut points = Vec::new();
        for p in self.marked_points() {
            let mut vertices: Vec<Vec<Rat>> = Vec::new();
            for d in &self.divisors {
                for v in d.slice_at(&p).vertices() {
                    if !vertices.contains(v) {
                        vertices.push(v.clone());
                    }
                }
            }
            vertices.sort_by(|a, b| {
                a.iter()
                    .zip(b)
                    .map(|(x, y)| x.cmp(y))
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal)
            });
            let vertices =
                vertices.into_iter().map(|v| (v.clone(), vertex_index(&v), true)).collect();
            points.push(PointSlice { point: p, vertices });
        }

        let mut rays: Vec<Vec<Int>> = Vec::new();
        for d in &self.divisors {
            for r in d.tail().rays() {
                if !rays.contains(r) {
                    rays.push(r.clone());
                }
            }
        }
        rays.sort();
        let rays = rays
            .into_iter()
            .map(|ray| {
                let extremal = self
                    .divisors
                    .iter()
                    .any(|d| d.tail().contains_int(&ray) && ray_misses(&ray, &d.degree()));
                RaySlice { ray, extremal }
            })
            .collect();
        SliceData { points, rays }
    }
}

/// Whether the ray through `v` misses the polyhedron entirely
/// (one-dimensional exact feasibility over the facets).
fn ray_misses(v: &[Int], degree: &SigmaPolyhedron) -> bool {
    if degree.is_empty() {
        return true;
    }
    let dim = degree.ambient_rank();
    let vq = to_rat_vec(v);
    let mut lo = Rat::zero();
    let mut hi: Option<Rat> = None;
    for f in degree.facets() {
        let (a, c) = f.split_at(dim);
        let slope = dot_iq(a, &vq);
        let offset = Rat::from_integer(c[0].clone());
        if slope.is_zero() {
            if offset.is_negative() {
                return true;
            }
        } else if slope.is_positive() {
            let bound = -&offset / &slope;
            if bound > lo {
                lo = bound;
            }
        } else {
            let bound = -&offset / &slope;
            hi = Some(match hi {
                None => bound,
                Some(h) => {
                    if bound < h {
                        bound
                    } else {
                        h
                    }
                }
            });
        }
    }
    matches!(hi, Some(h) if h < lo)
}

/// Whether finitely many cells (pairwise intersecting in common faces)
/// cover the whole space: at least one full-dimensional cell, and every
/// facet of every full-dimensional cell is matched by another cell lying
/// across it.
pub fn complete_subdivision(dim: usize, cells: &[SigmaPolyhedron]) -> bool {
    let mut distinct: Vec<&SigmaPolyhedron> = Vec::new();
    for c in cells {
        if !c.is_empty() && !distinct.contains(&c) {
            distinct.push(c);
        }
    }
    let full: Vec<&SigmaPolyhedron> =
        distinct.iter().copied().filter(|c| c.affine_dim() == dim).collect();
    if full.is_empty() {
        return false;
    }
    for cell in &full {
        for facet in cell.facets() {
            let (a, _) = facet.split_at(dim);
            if a.iter().all(Zero::is_zero) {
                // the at-infinity inequality of the homogenization bounds
                // nothing in the finite region
                continue;
            }
            let face = cell.facet_slice(facet);
            let Some(face) = face else {
                return false;
            };
            let matched = distinct.iter().any(|other| {
                if *other == *cell || !other.contains_poly(&face) {
                    return false;
                }
                let beyond_vertex = other.vertices().iter().any(|v| {
                    (dot_iq(a, v) + Rat::from_integer(facet[dim].clone())).is_negative()
                });
                let beyond_ray = other
                    .tail()
                    .map(|t| t.generators().iter().any(|r| dot_i(a, r).is_negative()))
                    .unwrap_or(false);
                beyond_vertex || beyond_ray
            });
            if !matched {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::{rat, ratio, rvec};

    fn sigma() -> Cone {
        Cone::from_generators(2, &[rvec(&[1, 1]), rvec(&[0, 1])])
    }

    /// The running example: coefficients `(0,1) + sigma` at 0 and
    /// `[0,1] x 0 + sigma` at infinity; the associated variety is affine
    /// 3-space.
    fn example_divisor() -> PolyhedralDivisorP1 {
        let s = sigma();
        let d0 = SigmaPolyhedron::from_points_and_tail(2, &[rvec(&[0, 1])], &s).unwrap();
        let dinf =
            SigmaPolyhedron::from_points_and_tail(2, &[rvec(&[0, 0]), rvec(&[1, 0])], &s).unwrap();
        PolyhedralDivisorP1::new(
            2,
            s,
            vec![(P1Point::from_ints(0, 1), d0), (P1Point::from_ints(1, 0), dinf)],
        )
        .unwrap()
    }

    #[test]
    fn evaluate_example() {
        let d = example_divisor();
        let eval = d.evaluate(&rvec(&[0, 1])).unwrap();
        assert_eq!(eval.len(), 2);
        assert_eq!(eval[0].1, rat(1)); // over 0
        assert_eq!(eval[1].1, rat(0)); // over infinity
        let zero = d.evaluate(&rvec(&[0, 0])).unwrap();
        assert!(zero.iter().all(|(_, q)| q.is_zero()));
        let trivial = PolyhedralDivisorP1::trivial(sigma());
        assert!(trivial.evaluate(&rvec(&[1, 0])).unwrap().is_empty());
        assert_eq!(d.evaluate(&rvec(&[0, -1])), Err(Error::UnboundedBelow));
    }

    #[test]
    fn degree_example() {
        let d = example_divisor();
        let deg = d.degree();
        assert_eq!(deg.vertices(), &[rvec(&[0, 1]), rvec(&[1, 1])]);
        assert_eq!(deg.tail(), Some(&sigma()));
        assert!(d.is_proper_p1());

        let trivial = PolyhedralDivisorP1::trivial(sigma());
        assert_eq!(trivial.degree(), SigmaPolyhedron::cone_as_polyhedron(&sigma()).unwrap());
        assert!(!trivial.is_proper_p1());

        let with_empty = PolyhedralDivisorP1::new(
            2,
            sigma(),
            vec![(P1Point::from_ints(1, 0), SigmaPolyhedron::empty(2))],
        )
        .unwrap();
        assert!(with_empty.degree().is_empty());
        assert!(with_empty.is_proper_p1());
    }

    #[test]
    fn graded_pieces_match_monomial_count() {
        // the torus action t.z = (t1^-1 t2 z1, t1 z2, t2 z3) on affine
        // 3-space: monomials of weight u are counted directly
        let d = example_divisor();
        let count = |u1: i64, u2: i64| -> Int {
            let mut n = 0i64;
            for a in 0..=40 {
                let b = u1 + a;
                let c = u2 - a;
                if b >= 0 && c >= 0 {
                    n += 1;
                }
            }
            Int::from(n)
        };
        for u1 in -5i64..=5 {
            for u2 in -5i64..=5 {
                let u = vec![rat(u1), rat(u2)];
                let admissible = u1 + u2 >= 0 && u2 >= 0;
                if admissible {
                    assert_eq!(d.graded_piece_dim(&u).unwrap(), count(u1, u2), "u=({u1},{u2})");
                } else {
                    assert!(d.graded_piece_dim(&u).is_err());
                }
            }
        }
        assert_eq!(d.graded_piece_dim(&rvec(&[0, 0])).unwrap(), Int::from(1));
        assert_eq!(d.graded_piece_dim(&rvec(&[0, 1])).unwrap(), Int::from(2));
        assert_eq!(d.graded_piece_dim(&rvec(&[1, 0])).unwrap(), Int::from(1));
    }

    #[test]
    fn graded_piece_requires_complete_locus() {
        let with_empty = PolyhedralDivisorP1::new(
            2,
            sigma(),
            vec![(P1Point::from_ints(1, 0), SigmaPolyhedron::empty(2))],
        )
        .unwrap();
        assert_eq!(with_empty.graded_piece_dim(&rvec(&[0, 1])), Err(Error::NonCompleteLocus));
    }

    #[test]
    fn face_of_itself() {
        let d = example_divisor();
        assert!(is_face_pdiv(&d, &d).unwrap());
    }

    #[test]
    fn trivial_divisor_follows_the_slice_face_test() {
        // the trivial divisor on a tail face is not a face here: the
        // shifted slice over 0 does not admit the cone as a face
        let d = example_divisor();
        let sub = PolyhedralDivisorP1::trivial(Cone::from_generators(2, &[rvec(&[1, 1])]));
        assert!(!is_face_pdiv(&sub, &d).unwrap());
        // against the trivial divisor of the full tail it is one
        let full = PolyhedralDivisorP1::trivial(sigma());
        assert!(is_face_pdiv(&sub, &full).unwrap());
    }

    #[test]
    fn one_dimensional_non_face_pair_is_rejected() {
        let right = Cone::from_generators(1, &[vec![rat(1)]]);
        let left = Cone::from_generators(1, &[vec![rat(-1)]]);
        let p = P1Point::from_ints(1, 0);
        let a = PolyhedralDivisorP1::new(
            1,
            left.clone(),
            vec![(
                p.clone(),
                SigmaPolyhedron::from_points_and_tail(1, &[vec![rat(1)]], &left).unwrap(),
            )],
        )
        .unwrap();
        let b = PolyhedralDivisorP1::new(
            1,
            right.clone(),
            vec![(
                p.clone(),
                SigmaPolyhedron::from_points_and_tail(1, &[vec![rat(0)]], &right).unwrap(),
            )],
        )
        .unwrap();
        // slices (-inf,1] and [0,inf) overlap in [0,1], not a face of either
        let fan = DivisorialFanP1::new(vec![a, b]).unwrap();
        let report = fan.check_fan();
        assert!(!report.valid);
        assert_eq!(report.pair_failures.len(), 1);
    }

    #[test]
    fn single_proper_divisor_is_valid_but_incomplete() {
        let fan = DivisorialFanP1::new(vec![example_divisor()]).unwrap();
        let report = fan.check_fan();
        assert!(report.valid);
        assert!(!report.complete);
    }

    #[test]
    fn extremal_ray_detection() {
        // tail = the nonnegative ray, empty coefficient at one point:
        // degree is empty, so the ray is extremal
        let right = Cone::from_generators(1, &[vec![rat(1)]]);
        let d = PolyhedralDivisorP1::new(
            1,
            right,
            vec![(P1Point::from_ints(1, 0), SigmaPolyhedron::empty(1))],
        )
        .unwrap();
        let fan = DivisorialFanP1::new(vec![d]).unwrap();
        let report = fan.check_fan();
        assert!(report.valid && !report.complete);
        let slices = fan.slices();
        assert!(slices.points.is_empty());
        assert_eq!(slices.rays.len(), 1);
        assert!(slices.rays[0].extremal);

        // a shifted coefficient whose degree still meets the ray: not extremal
        let right = Cone::from_generators(1, &[vec![rat(1)]]);
        let shifted = PolyhedralDivisorP1::new(
            1,
            right.clone(),
            vec![(
                P1Point::from_ints(1, 0),
                SigmaPolyhedron::from_points_and_tail(1, &[vec![ratio(1, 2)]], &right).unwrap(),
            )],
        )
        .unwrap();
        let fan = DivisorialFanP1::new(vec![shifted]).unwrap();
        let slices = fan.slices();
        assert_eq!(slices.points.len(), 1);
        assert_eq!(slices.points[0].vertices.len(), 1);
        assert_eq!(slices.points[0].vertices[0].1, Int::from(2));
        assert!(!slices.rays[0].extremal);
    }

    #[test]
    fn superadditivity_of_evaluations() {
        let d = example_divisor();
        let weights: Vec<Vec<Rat>> =
            vec![rvec(&[1, 0]), rvec(&[0, 1]), rvec(&[2, 1]), rvec(&[-1, 1])];
        for u in &weights {
            for v in &weights {
                let sum: Vec<Rat> = u.iter().zip(v).map(|(a, b)| a + b).collect();
                let eu = d.evaluate(u).unwrap();
                let ev = d.evaluate(v).unwrap();
                let es = d.evaluate(&sum).unwrap();
                for k in 0..es.len() {
                    assert!(es[k].1 >= &eu[k].1 + &ev[k].1);
                }
            }
        }
    }

    #[test]
    fn degree_support_min_is_sum_of_coefficient_minima() {
        let d = example_divisor();
        let deg = d.degree();
        for u in [rvec(&[1, 0]), rvec(&[0, 1]), rvec(&[3, 2]), rvec(&[-1, 1])] {
            let total: Rat = d.evaluate(&u).unwrap().into_iter().map(|(_, q)| q).sum();
            assert_eq!(deg.support_min(&u).unwrap(), total);
        }
    }
}
