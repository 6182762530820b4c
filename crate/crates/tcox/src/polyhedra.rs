//! Exact rational convex geometry: cones, sigma-polyhedra (bounded part
//! plus tail cone), Minkowski sums, support minima, intersections and face
//! tests.
//!
//! Everything runs through one double-description routine that converts
//! between generator and inequality representations over the integers.
//! Representations are canonicalized after every construction, so structural
//! equality of values is geometric equality. Target dimensions are small
//! (rank at most four in practice) and the algorithms are written for
//! clarity, not asymptotics.

use crate::util::{dot_i, dot_iq, fmt_qvec, is_zero_q, primitive_dir, rank_q, to_rat_vec};
use crate::{Error, Int, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

fn cmp_ivec(a: &[Int], b: &[Int]) -> Ordering {
    a.cmp(b)
}

fn cmp_qvec(a: &[Rat], b: &[Rat]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    a.len().cmp(&b.len())
}

fn unit(dim: usize, i: usize) -> Vec<Int> {
    let mut v = vec![Int::zero(); dim];
    v[i] = Int::one();
    v
}

fn primitive_int(v: &[Int]) -> Vec<Int> {
    let g = v.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Generators of the cone `{x : h.x >= 0 for all h}`, split into a lineality
/// basis and extreme rays modulo lineality (double description method).
pub(crate) struct DdOutput {
    pub lineality: Vec<Vec<Int>>,
    pub rays: Vec<Vec<Int>>,
}

struct DdRay {
    v: Vec<Int>,
    zero: Vec<bool>,
}

pub(crate) fn intersect_halfspaces(dim: usize, halfspaces: &[Vec<Int>]) -> DdOutput {
    let mut lin: Vec<Vec<Int>> = (0..dim).map(|i| unit(dim, i)).collect();
    let mut rays: Vec<DdRay> = Vec::new();

    for (idx, h) in halfspaces.iter().enumerate() {
        debug_assert_eq!(h.len(), dim);
        let lin_vals: Vec<Int> = lin.iter().map(|l| dot_i(l, h)).collect();
        if let Some(p) = lin_vals.iter().position(|x| !x.is_zero()) {
            // the hyperplane cuts the lineality space: one basis vector
            // becomes a ray, the rest is projected into the hyperplane
            let mut pivot = lin.remove(p);
            let mut pval = lin_vals[p].clone();
            if pval.is_negative() {
                pivot = pivot.iter().map(|x| -x).collect();
                pval = -pval;
            }
            for l in lin.iter_mut() {
                let lval = dot_i(l, h);
                if !lval.is_zero() {
                    let adj: Vec<Int> = l
                        .iter()
                        .zip(&pivot)
                        .map(|(a, b)| a * &pval - b * &lval)
                        .collect();
                    *l = primitive_int(&adj);
                }
            }
            for r in rays.iter_mut() {
                let rval = dot_i(&r.v, h);
                if !rval.is_zero() {
                    let adj: Vec<Int> = r
                        .v
                        .iter()
                        .zip(&pivot)
                        .map(|(a, b)| a * &pval - b * &rval)
                        .collect();
                    r.v = primitive_int(&adj);
                }
                r.zero.push(true);
            }
            let mut zero = vec![true; idx];
            zero.push(false);
            rays.push(DdRay { v: primitive_int(&pivot), zero });
        } else {
            let vals: Vec<Int> = rays.iter().map(|r| dot_i(&r.v, h)).collect();
            if vals.iter().all(|v| !v.is_negative()) {
                for (r, v) in rays.iter_mut().zip(&vals) {
                    r.zero.push(v.is_zero());
                }
                continue;
            }
            let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
            let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();

            // adjacency: no third ray whose zero set contains the common one
            let adjacent = |i: usize, j: usize| -> bool {
                let common: Vec<bool> =
                    rays[i].zero.iter().zip(&rays[j].zero).map(|(a, b)| *a && *b).collect();
                !(0..rays.len()).any(|k| {
                    k != i
                        && k != j
                        && common.iter().zip(&rays[k].zero).all(|(c, z)| !*c || *z)
                })
            };

            let mut combos: Vec<Vec<Int>> = Vec::new();
            for &i in &pos {
                for &j in &neg {
                    if adjacent(i, j) {
                        let (ri, rj) = (&rays[i].v, &rays[j].v);
                        let c: Vec<Int> = ri
                            .iter()
                            .zip(rj)
                            .map(|(a, b)| a * (-&vals[j]) + b * &vals[i])
                            .collect();
                        combos.push(primitive_int(&c));
                    }
                }
            }

            let mut next: Vec<DdRay> = Vec::new();
            let mut seen: BTreeSet<Vec<Int>> = BTreeSet::new();
            for i in 0..rays.len() {
                if vals[i].is_negative() {
                    continue;
                }
                let mut r = DdRay { v: rays[i].v.clone(), zero: rays[i].zero.clone() };
                r.zero.push(vals[i].is_zero());
                if seen.insert(r.v.clone()) {
                    next.push(r);
                }
            }
            for c in combos {
                if seen.insert(c.clone()) {
                    // recompute the exact zero set: a combination may land on
                    // earlier hyperplanes accidentally
                    let zero: Vec<bool> =
                        halfspaces[..=idx].iter().map(|hh| dot_i(&c, hh).is_zero()).collect();
                    next.push(DdRay { v: c, zero });
                }
            }
            rays = next;
        }
    }

    let mut lineality = crate::intlinalg::hnf_rows(&lin);
    lineality.sort_by(|a, b| cmp_ivec(a, b));
    let mut out_rays: Vec<Vec<Int>> = rays.into_iter().map(|r| reduce_mod_span(&r.v, &lineality)).collect();
    out_rays.sort_by(|a, b| cmp_ivec(a, b));
    out_rays.dedup();
    DdOutput { lineality, rays: out_rays }
}

/// Canonical representative of a ray modulo a lineality span: subtract the
/// rational projection onto the span (by Gaussian elimination on a basis),
/// then scale primitive.
fn reduce_mod_span(ray: &[Int], lin: &[Vec<Int>]) -> Vec<Int> {
    if lin.is_empty() {
        return primitive_int(ray);
    }
    let basis = crate::util::rref(&lin.iter().map(|l| to_rat_vec(l)).collect::<Vec<_>>());
    let mut v = to_rat_vec(ray);
    for row in &basis {
        let p = row.iter().position(|x| x.is_one()).expect("rref pivot");
        if !v[p].is_zero() {
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                let sub = &f * r;
                *x = &*x - sub;
            }
        }
    }
    if is_zero_q(&v) {
        vec![Int::zero(); ray.len()]
    } else {
        primitive_dir(&v).expect("nonzero")
    }
}

/// A rational convex polyhedral cone given by primitive generators, with the
/// inequality representation cached. Not necessarily pointed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    lineality: Vec<Vec<Int>>,
    rays: Vec<Vec<Int>>,
    normals: Vec<Vec<Int>>,
}

impl Cone {
    /// The cone spanned by the given generators (any rational vectors; zero
    /// vectors are ignored). Generators are canonicalized to the extreme
    /// rays plus a lineality basis.
    pub fn from_generators(dim: usize, gens: &[Vec<Rat>]) -> Cone {
        let int_gens: Vec<Vec<Int>> = gens
            .iter()
            .filter(|g| !is_zero_q(g))
            .map(|g| primitive_dir(g).expect("nonzero generator"))
            .collect();
        Cone::from_int_generators(dim, &int_gens)
    }

    pub fn from_int_generators(dim: usize, gens: &[Vec<Int>]) -> Cone {
        for g in gens {
            assert_eq!(g.len(), dim, "generator has wrong length");
        }
        let gens: Vec<Vec<Int>> = gens
            .iter()
            .filter(|g| !g.iter().all(Zero::is_zero))
            .map(|g| primitive_int(g))
            .collect();
        // dual generators are the facet normals
        let dual = intersect_halfspaces(dim, &gens);
        let normals = Cone::merge_output(&dual);
        // and re-intersecting yields the canonical generators
        let canon = intersect_halfspaces(dim, &normals);
        Cone { dim, lineality: canon.lineality, rays: canon.rays, normals }
    }

    /// The zero cone.
    pub fn zero(dim: usize) -> Cone {
        Cone::from_int_generators(dim, &[])
    }

    fn merge_output(out: &DdOutput) -> Vec<Vec<Int>> {
        let mut v: Vec<Vec<Int>> = out.rays.clone();
        for l in &out.lineality {
            v.push(l.clone());
            v.push(l.iter().map(|x| -x).collect());
        }
        v.sort_by(|a, b| cmp_ivec(a, b));
        v.dedup();
        v
    }

    pub fn ambient_rank(&self) -> usize {
        self.dim
    }

    /// Extreme rays (canonical, primitive). For pointed cones these generate.
    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<Int>] {
        &self.lineality
    }

    /// A full generator list: extreme rays plus both signs of the lineality
    /// basis.
    pub fn generators(&self) -> Vec<Vec<Int>> {
        let mut v = self.rays.clone();
        for l in &self.lineality {
            v.push(l.clone());
            v.push(l.iter().map(|x| -x).collect());
        }
        v
    }

    /// Inequality normals: the cone is exactly `{x : n.x >= 0}` over these.
    pub fn normals(&self) -> &[Vec<Int>] {
        &self.normals
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.lineality.is_empty() && self.rays.is_empty()
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.normals.iter().all(|n| !dot_iq(n, x).is_negative())
    }

    pub fn contains_int(&self, x: &[Int]) -> bool {
        self.normals.iter().all(|n| !dot_i(n, x).is_negative())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.generators().iter().all(|g| self.contains_int(g))
    }

    /// The dual cone `{u : u.x >= 0 on self}`.
    pub fn dual(&self) -> Cone {
        Cone::from_int_generators(self.dim, &self.normals)
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        assert_eq!(self.dim, other.dim);
        let mut normals = self.normals.clone();
        normals.extend(other.normals.iter().cloned());
        let out = intersect_halfspaces(self.dim, &normals);
        Cone::from_int_generators(self.dim, &Cone::merge_output(&out))
    }

    pub fn dim_of_span(&self) -> usize {
        let rows: Vec<Vec<Rat>> = self.generators().iter().map(|g| to_rat_vec(g)).collect();
        rank_q(&rows)
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(|g| crate::util::fmt_ivec(g)).collect();
        write!(f, "cone({})", gens.join(", "))
    }
}

/// A sigma-polyhedron: the Minkowski sum of a nonempty bounded polytope
/// (given by its vertices) and a pointed tail cone, or the empty set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigmaPolyhedron {
    Empty(usize),
    Poly(PolyBody),
}

/// The non-empty case: canonical vertex list, tail cone, and homogeneous
/// facet normals `(a, c)` meaning `a.x + c >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyBody {
    dim: usize,
    vertices: Vec<Vec<Rat>>,
    tail: Cone,
    facets: Vec<Vec<Int>>,
}

impl SigmaPolyhedron {
    pub fn empty(dim: usize) -> Self {
        SigmaPolyhedron::Empty(dim)
    }

    /// Convex hull of `points` plus `tail`. Redundant points are dropped, so
    /// the stored vertex list is exactly the vertex set.
    pub fn from_points_and_tail(dim: usize, points: &[Vec<Rat>], tail: &Cone) -> Result<Self> {
        if tail.ambient_rank() != dim {
            return Err(Error::AmbientMismatch(tail.ambient_rank(), dim));
        }
        if !tail.is_pointed() {
            return Err(Error::TailNotPointed);
        }
        if points.is_empty() {
            return Ok(SigmaPolyhedron::Empty(dim));
        }
        let mut hom: Vec<Vec<Int>> = Vec::new();
        for p in points {
            if p.len() != dim {
                return Err(Error::AmbientMismatch(p.len(), dim));
            }
            let mut h = p.to_vec();
            h.push(Rat::one());
            hom.push(primitive_dir(&h).expect("homogenized point is nonzero"));
        }
        for r in tail.rays() {
            let mut h = r.clone();
            h.push(Int::zero());
            hom.push(h);
        }
        let dual = intersect_halfspaces(dim + 1, &hom);
        let facets = Cone::merge_output(&dual);
        Self::from_hom_facets(dim, facets)
    }

    /// The tail cone viewed as a sigma-polyhedron with vertex set `{0}`.
    pub fn cone_as_polyhedron(tail: &Cone) -> Result<Self> {
        let dim = tail.ambient_rank();
        Self::from_points_and_tail(dim, &[vec![Rat::zero(); dim]], tail)
    }

    pub fn point(p: &[Rat]) -> Self {
        Self::from_points_and_tail(p.len(), &[p.to_vec()], &Cone::zero(p.len()))
            .expect("a single point is a polyhedron")
    }

    fn from_hom_facets(dim: usize, mut facets: Vec<Vec<Int>>) -> Result<Self> {
        // t >= 0 must be part of the system when rebuilding from inequalities
        facets.push(unit(dim + 1, dim));
        let gen = intersect_halfspaces(dim + 1, &facets);
        if !gen.lineality.is_empty() {
            return Err(Error::TailNotPointed);
        }
        let mut vertices: Vec<Vec<Rat>> = Vec::new();
        let mut tail_rays: Vec<Vec<Int>> = Vec::new();
        for r in &gen.rays {
            let t = &r[dim];
            debug_assert!(!t.is_negative());
            if t.is_zero() {
                tail_rays.push(r[..dim].to_vec());
            } else {
                let tq = Rat::from_integer(t.clone());
                vertices.push(r[..dim].iter().map(|x| Rat::from_integer(x.clone()) / &tq).collect());
            }
        }
        if vertices.is_empty() {
            return Ok(SigmaPolyhedron::Empty(dim));
        }
        vertices.sort_by(|a, b| cmp_qvec(a, b));
        let tail = Cone::from_int_generators(dim, &tail_rays);
        // recompute facets canonically from the minimal generators
        let mut hom: Vec<Vec<Int>> = Vec::new();
        for p in &vertices {
            let mut h = p.clone();
            h.push(Rat::one());
            hom.push(primitive_dir(&h).expect("nonzero"));
        }
        for r in tail.rays() {
            let mut h = r.clone();
            h.push(Int::zero());
            hom.push(h);
        }
        let dual = intersect_halfspaces(dim + 1, &hom);
        let facets = Cone::merge_output(&dual);
        Ok(SigmaPolyhedron::Poly(PolyBody { dim, vertices, tail, facets }))
    }

    pub fn ambient_rank(&self) -> usize {
        match self {
            SigmaPolyhedron::Empty(d) => *d,
            SigmaPolyhedron::Poly(b) => b.dim,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, SigmaPolyhedron::Empty(_))
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        match self {
            SigmaPolyhedron::Empty(_) => &[],
            SigmaPolyhedron::Poly(b) => &b.vertices,
        }
    }

    pub fn tail(&self) -> Option<&Cone> {
        match self {
            SigmaPolyhedron::Empty(_) => None,
            SigmaPolyhedron::Poly(b) => Some(&b.tail),
        }
    }

    pub fn facets(&self) -> &[Vec<Int>] {
        match self {
            SigmaPolyhedron::Empty(_) => &[],
            SigmaPolyhedron::Poly(b) => &b.facets,
        }
    }

    /// Dimension of the affine hull; the empty polyhedron reports 0 and is
    /// distinguished by [`SigmaPolyhedron::is_empty`].
    pub fn affine_dim(&self) -> usize {
        match self {
            SigmaPolyhedron::Empty(_) => 0,
            SigmaPolyhedron::Poly(b) => {
                let base = &b.vertices[0];
                let mut rows: Vec<Vec<Rat>> = b.vertices[1..]
                    .iter()
                    .map(|v| v.iter().zip(base).map(|(a, c)| a - c).collect())
                    .collect();
                rows.extend(b.tail.generators().iter().map(|g| to_rat_vec(g)));
                rank_q(&rows)
            }
        }
    }

    pub fn contains_point(&self, x: &[Rat]) -> bool {
        match self {
            SigmaPolyhedron::Empty(_) => false,
            SigmaPolyhedron::Poly(b) => b.facets.iter().all(|f| {
                let (a, c) = f.split_at(b.dim);
                !(dot_iq(a, x) + Rat::from_integer(c[0].clone())).is_negative()
            }),
        }
    }

    /// Set containment of polyhedra.
    pub fn contains_poly(&self, other: &SigmaPolyhedron) -> bool {
        match other {
            SigmaPolyhedron::Empty(_) => true,
            SigmaPolyhedron::Poly(o) => match self {
                SigmaPolyhedron::Empty(_) => false,
                SigmaPolyhedron::Poly(s) => {
                    o.vertices.iter().all(|v| self.contains_point(v))
                        && s.tail.contains_cone(&o.tail)
                }
            },
        }
    }

    /// Minkowski sum. The empty polyhedron absorbs; otherwise the tails must
    /// agree (the shared tail cone is the neutral element).
    pub fn minkowski_sum(&self, other: &SigmaPolyhedron) -> Result<SigmaPolyhedron> {
        if self.ambient_rank() != other.ambient_rank() {
            return Err(Error::AmbientMismatch(self.ambient_rank(), other.ambient_rank()));
        }
        match (self, other) {
            (SigmaPolyhedron::Empty(d), _) | (_, SigmaPolyhedron::Empty(d)) => {
                Ok(SigmaPolyhedron::Empty(*d))
            }
            (SigmaPolyhedron::Poly(a), SigmaPolyhedron::Poly(b)) => {
                if a.tail != b.tail {
                    return Err(Error::TailMismatch);
                }
                let mut points = Vec::with_capacity(a.vertices.len() * b.vertices.len());
                for va in &a.vertices {
                    for vb in &b.vertices {
                        points.push(va.iter().zip(vb).map(|(x, y)| x + y).collect());
                    }
                }
                SigmaPolyhedron::from_points_and_tail(a.dim, &points, &a.tail)
            }
        }
    }

    /// Minimum of `<u, .>` over the polyhedron. Defined when `u` pairs
    /// nonnegatively with the tail cone; attained at a vertex.
    pub fn support_min(&self, u: &[Rat]) -> Result<Rat> {
        let body = match self {
            SigmaPolyhedron::Empty(_) => return Err(Error::EmptyPolyhedron),
            SigmaPolyhedron::Poly(b) => b,
        };
        for g in body.tail.generators() {
            if dot_iq(&g, u).is_negative() {
                return Err(Error::UnboundedBelow);
            }
        }
        Ok(body
            .vertices
            .iter()
            .map(|v| crate::util::dot_q(v, u))
            .min()
            .expect("nonempty vertex list"))
    }

    /// Exact intersection via the inequality representations.
    pub fn intersect(&self, other: &SigmaPolyhedron) -> Result<SigmaPolyhedron> {
        if self.ambient_rank() != other.ambient_rank() {
            return Err(Error::AmbientMismatch(self.ambient_rank(), other.ambient_rank()));
        }
        let dim = self.ambient_rank();
        match (self, other) {
            (SigmaPolyhedron::Empty(_), _) | (_, SigmaPolyhedron::Empty(_)) => {
                Ok(SigmaPolyhedron::Empty(dim))
            }
            (SigmaPolyhedron::Poly(a), SigmaPolyhedron::Poly(b)) => {
                let mut facets = a.facets.clone();
                facets.extend(b.facets.iter().cloned());
                SigmaPolyhedron::from_hom_facets(dim, facets)
            }
        }
    }

    /// The face cut out by one of the polyhedron's own facet inequalities.
    pub fn facet_slice(&self, facet: &[Int]) -> Option<SigmaPolyhedron> {
        match self {
            SigmaPolyhedron::Empty(_) => None,
            SigmaPolyhedron::Poly(b) => {
                let mut facets = b.facets.clone();
                facets.push(facet.iter().map(|x| -x).collect());
                SigmaPolyhedron::from_hom_facets(b.dim, facets).ok()
            }
        }
    }

    /// Whether `face` is a face of `self`: the empty set and `self` count,
    /// and otherwise `face` must be cut out by a subset of active facets.
    pub fn is_face(face: &SigmaPolyhedron, of: &SigmaPolyhedron) -> bool {
        if face.is_empty() {
            return true;
        }
        if of.is_empty() {
            return false;
        }
        if !of.contains_poly(face) {
            return false;
        }
        let body = match of {
            SigmaPolyhedron::Poly(b) => b,
            SigmaPolyhedron::Empty(_) => unreachable!(),
        };
        let dim = body.dim;
        let active: Vec<Vec<Int>> = body
            .facets
            .iter()
            .filter(|f| {
                let (a, c) = f.split_at(dim);
                face.vertices().iter().all(|v| (dot_iq(a, v) + Rat::from_integer(c[0].clone())).is_zero())
                    && face
                        .tail()
                        .map(|t| t.generators().iter().all(|r| dot_i(a, r).is_zero()))
                        .unwrap_or(true)
            })
            .cloned()
            .collect();
        let mut facets = body.facets.clone();
        for a in &active {
            facets.push(a.iter().map(|x| -x).collect());
        }
        match SigmaPolyhedron::from_hom_facets(dim, facets) {
            Ok(cut) => &cut == face,
            Err(_) => false,
        }
    }
}

impl fmt::Display for SigmaPolyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaPolyhedron::Empty(_) => write!(f, "empty"),
            SigmaPolyhedron::Poly(b) => {
                let vs: Vec<String> = b.vertices.iter().map(|v| fmt_qvec(v)).collect();
                write!(f, "conv({}) + {}", vs.join(", "), b.tail)
            }
        }
    }
}

/// Least positive integer `mu` with `mu * v` integral: the lcm of the
/// reduced denominators.
pub fn vertex_index(v: &[Rat]) -> Int {
    v.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()))
}

/// The unique primitive lattice vector on the ray through `v`.
pub fn primitive(v: &[Rat]) -> Result<Vec<Int>> {
    primitive_dir(v)
}
