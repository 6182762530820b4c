//! The complexity-one engine: divisorial fan (or abstract marked-point
//! data) to class group with degree map, Cox ring presentation, canonical
//! class, and moving cone.

use crate::intlinalg::{cokernel, trinomial_syzygies, FGAbelianGroup, GroupElement, IntMatrix};
use crate::pdiv::{DivisorialFanP1, SliceData};
use crate::polyhedra::Cone;
use crate::presentation::{
    GradedPresentation, Generator, GradingStatus, Monomial, Polynomial, Provenance,
};
use crate::projline::{all_distinct, P1Point};
use crate::util::to_rat_vec;
use crate::{Error, Int, Rat, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// One fiber component over a marked point: a generator label and the order
/// of its generic isotropy group.
#[derive(Debug, Clone)]
pub struct DLabel {
    pub label: String,
    pub isotropy: Int,
}

/// The abstract data of a complexity-one torus action: marked points with
/// chosen representatives, per point the fiber components with isotropy
/// orders, and the labels of the divisors outside the generic-orbit locus.
#[derive(Debug, Clone)]
pub struct ComplexityOneData {
    pub points: Vec<P1Point>,
    pub arms: Vec<Vec<DLabel>>,
    pub e_labels: Vec<String>,
}

impl ComplexityOneData {
    pub fn new(points: Vec<P1Point>, arms: Vec<Vec<DLabel>>, e_labels: Vec<String>) -> Result<Self> {
        if points.len() != arms.len() {
            return Err(Error::DegeneratePoints("one arm per marked point required".into()));
        }
        if !all_distinct(&points) {
            return Err(Error::DegeneratePoints("marked points must be pairwise distinct".into()));
        }
        for arm in &arms {
            if arm.is_empty() {
                return Err(Error::DegeneratePoints("every marked point needs a fiber component".into()));
            }
            for d in arm {
                if d.isotropy < Int::from(1) {
                    return Err(Error::InvalidGraph(format!(
                        "isotropy order of {} must be positive",
                        d.label
                    )));
                }
            }
        }
        Ok(ComplexityOneData { points, arms, e_labels })
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn d_labels(&self) -> Vec<String> {
        self.arms.iter().flatten().map(|d| d.label.clone()).collect()
    }

    pub fn all_labels(&self) -> Vec<String> {
        let mut out = self.e_labels.clone();
        out.extend(self.d_labels());
        out
    }

    /// The slot monomial of one marked point: the product of its fiber
    /// variables raised to their isotropy orders.
    pub fn slot_monomial(&self, i: usize) -> Monomial {
        use num_traits::ToPrimitive;
        let mut m = Monomial::one();
        for d in &self.arms[i] {
            let e = d.isotropy.to_u32().expect("isotropy order fits an exponent");
            m.mul_var(&d.label, e);
        }
        m
    }

    pub fn slot_monomials(&self) -> Vec<Monomial> {
        (0..self.points.len()).map(|i| self.slot_monomial(i)).collect()
    }
}

/// A degree assignment for the Cox generators plus the base class.
#[derive(Debug, Clone)]
pub struct CoxGrading {
    pub group: FGAbelianGroup,
    pub base_class: GroupElement,
    pub degrees: BTreeMap<String, GroupElement>,
    pub status: GradingStatus,
}

impl CoxGrading {
    pub fn degree_of(&self, label: &str) -> Result<&GroupElement> {
        self.degrees.get(label).ok_or_else(|| Error::MissingDegree(label.to_string()))
    }
}

/// Class-group data computed from a divisorial fan: the relation matrix in
/// the documented column order, the group, and the degree map.
#[derive(Debug, Clone)]
pub struct ClassGroupData {
    /// Column order: the base class, then one column per slice vertex
    /// (points in canonical order, vertices sorted within each point), then
    /// one column per extremal ray.
    pub matrix: IntMatrix,
    pub grading: CoxGrading,
}

/// Extracts the abstract complexity-one data from a fan: marked points with
/// non-trivial slices, fiber components from slice vertices with their
/// indices, and one label per extremal ray. The fan must pass the pairwise
/// face conditions; completeness is reported separately by `check_fan`.
pub fn from_fan(fan: &DivisorialFanP1) -> Result<(ComplexityOneData, SliceData)> {
    let report = fan.check_fan();
    if !report.valid {
        let detail = report
            .pair_failures
            .first()
            .map(|(i, j, msg)| format!("divisors {i} and {j}: {msg}"))
            .unwrap_or_default();
        return Err(Error::InvalidFan(detail));
    }
    let slices = fan.slices();
    let mut points = Vec::new();
    let mut arms = Vec::new();
    let mut t = 0usize;
    for ps in &slices.points {
        points.push(ps.point.clone());
        let mut arm = Vec::new();
        for (_, mu, _extremal) in &ps.vertices {
            t += 1;
            arm.push(DLabel { label: format!("T{t}"), isotropy: mu.clone() });
        }
        arms.push(arm);
    }
    let e_labels: Vec<String> = slices
        .rays
        .iter()
        .filter(|r| r.extremal)
        .enumerate()
        .map(|(k, _)| format!("S{}", k + 1))
        .collect();
    Ok((ComplexityOneData::new(points, arms, e_labels)?, slices))
}

/// The divisor class group of the variety of a divisorial fan, presented by
/// the canonical relation matrix: one row per non-trivial slice (the fiber
/// relation) and one row per lattice basis vector (the character relation).
pub fn class_group_from_fan(fan: &DivisorialFanP1) -> Result<ClassGroupData> {
    let (data, slices) = from_fan(fan)?;
    let dim = fan.ambient_rank();
    let extremal_rays: Vec<&Vec<Int>> =
        slices.rays.iter().filter(|r| r.extremal).map(|r| &r.ray).collect();
    let n_vertices: usize = slices.points.iter().map(|p| p.vertices.len()).sum();
    let cols = 1 + n_vertices + extremal_rays.len();
    let rows = slices.points.len() + dim;
    let mut a = IntMatrix::zero(rows, cols);

    // fiber rows: sum of mu(v) D_v equals the base class
    let mut col = 1usize;
    let mut vertex_cols: Vec<(usize, Vec<Rat>, Int)> = Vec::new(); // (col, vertex, mu)
    for (i, ps) in slices.points.iter().enumerate() {
        a[(i, 0)] = Int::from(-1);
        for (v, mu, _) in &ps.vertices {
            a[(i, col)] = mu.clone();
            vertex_cols.push((col, v.clone(), mu.clone()));
            col += 1;
        }
    }
    // character rows: <u, v_rho> on the rays, mu(v) <u, v> on the vertices
    for k in 0..dim {
        let row = slices.points.len() + k;
        for (c, v, mu) in &vertex_cols {
            let val = Rat::from_integer(mu.clone()) * &v[k];
            debug_assert!(val.denom() == &Int::from(1), "mu clears denominators");
            a[(row, *c)] = val.numer().clone();
        }
        for (e, ray) in extremal_rays.iter().enumerate() {
            a[(row, 1 + n_vertices + e)] = ray[k].clone();
        }
    }

    let coker = cokernel(&a);
    let mut degrees = BTreeMap::new();
    let d_labels = data.d_labels();
    for (idx, label) in d_labels.iter().enumerate() {
        degrees.insert(label.clone(), coker.degrees[1 + idx].clone());
    }
    for (idx, label) in data.e_labels.iter().enumerate() {
        degrees.insert(label.clone(), coker.degrees[1 + n_vertices + idx].clone());
    }
    let grading = CoxGrading {
        group: coker.group,
        base_class: coker.degrees[0].clone(),
        degrees,
        status: GradingStatus::Full,
    };
    Ok(ClassGroupData { matrix: a, grading })
}

/// A grading synthesized from the fiber relations alone (no character
/// rows): valid for abstract data without a backing fan. Torsion-aware but
/// generally coarser than the divisor class group.
pub fn fiber_grading(data: &ComplexityOneData) -> CoxGrading {
    let labels = data.all_labels();
    let n_e = data.e_labels.len();
    let cols = 1 + labels.len();
    let rows = data.points.len();
    let mut a = IntMatrix::zero(rows, cols);
    let mut col = 1 + n_e;
    for (i, arm) in data.arms.iter().enumerate() {
        a[(i, 0)] = Int::from(-1);
        for d in arm {
            a[(i, col)] = d.isotropy.clone();
            col += 1;
        }
    }
    let coker = cokernel(&a);
    let mut degrees = BTreeMap::new();
    for (idx, label) in labels.iter().enumerate() {
        degrees.insert(label.clone(), coker.degrees[1 + idx].clone());
    }
    CoxGrading {
        group: coker.group,
        base_class: coker.degrees[0].clone(),
        degrees,
        status: GradingStatus::Full,
    }
}

/// The Cox ring presentation of complexity-one data under a grading:
/// generators are the ray labels and the fiber labels with their degrees;
/// the relations are the trinomials built from the point representatives,
/// one for each consecutive triple of marked points.
pub fn cox_ring(data: &ComplexityOneData, grading: &CoxGrading) -> Result<GradedPresentation> {
    let syzygies = trinomial_syzygies(&data.points)?;
    let slots = data.slot_monomials();
    let relations: Vec<Polynomial> = syzygies
        .iter()
        .map(|row| {
            Polynomial::from_terms(
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (slots[i].clone(), c.clone()))
                    .collect(),
            )
        })
        .collect();
    let mut generators = Vec::new();
    for label in &data.e_labels {
        generators.push(Generator {
            label: label.clone(),
            degree: Some(grading.degree_of(label)?.clone()),
            tag: Provenance::ERay,
        });
    }
    for label in data.d_labels() {
        generators.push(Generator {
            label: label.clone(),
            degree: Some(grading.degree_of(&label)?.clone()),
            tag: Provenance::DVertex,
        });
    }
    let out = GradedPresentation {
        grading: Some(grading.group.clone()),
        status: grading.status,
        generators,
        relations,
    };
    Ok(out)
}

/// The canonical class from the discrete data: with `r + 1` marked points,
/// `max(0, r-1)` times the chosen fiber minus all boundary and fiber
/// divisors. Independent of the chosen arm.
pub fn canonical_class(
    data: &ComplexityOneData,
    grading: &CoxGrading,
    arm: usize,
) -> Result<GroupElement> {
    if arm >= data.arms.len() {
        return Err(Error::ArmIndexOutOfRange {
            index: arm,
            max: data.arms.len().saturating_sub(1),
        });
    }
    let r_minus_1 = data.points.len() as i64 - 2;
    let coeff = Int::from(r_minus_1.max(0));
    let mut acc = grading.group.zero_element();
    for d in &data.arms[arm] {
        acc = acc.add(&grading.degree_of(&d.label)?.scale(&(&coeff * &d.isotropy)))?;
    }
    for label in &data.e_labels {
        acc = acc.sub(grading.degree_of(label)?)?;
    }
    for label in data.d_labels() {
        acc = acc.sub(grading.degree_of(&label)?)?;
    }
    Ok(acc)
}

/// The cone of divisor classes without fixed components, inside the free
/// part of the grading: the intersection over every generator of the cone
/// spanned by all other degrees.
pub fn moving_cone(grading: &CoxGrading, labels: &[String]) -> Result<Cone> {
    let rank = grading.group.free_rank;
    let free_parts: Vec<Vec<Rat>> = labels
        .iter()
        .map(|l| grading.degree_of(l).map(|d| to_rat_vec(d.free_part())))
        .collect::<Result<_>>()?;
    let mut acc: Option<Cone> = None;
    for omit in 0..labels.len() {
        let gens: Vec<Vec<Rat>> = free_parts
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != omit)
            .map(|(_, v)| v.clone())
            .collect();
        let cone = Cone::from_generators(rank, &gens);
        acc = Some(match acc {
            None => cone,
            Some(c) => c.intersect(&cone),
        });
    }
    Ok(acc.unwrap_or_else(|| Cone::zero(rank)))
}

/// Substitutes the slot values into a relation row: the weighted sum of the
/// point representatives must vanish for every emitted relation.
pub fn relation_annihilates_points(coefficients: &[Rat], points: &[P1Point]) -> bool {
    let mut b = Rat::zero();
    let mut c = Rat::zero();
    for (coeff, p) in coefficients.iter().zip(points) {
        let (pb, pc) = p.representative();
        b += coeff * pb;
        c += coeff * pc;
    }
    b.is_zero() && c.is_zero()
}
