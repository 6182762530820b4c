//! Cox rings of smooth complete rational K*-surfaces from their
//! Orlik-Wagreich graphs, and contraction to singular models.
//!
//! Each arm of the graph is a chain of invariant curves between the two
//! fixed-point curves; the negated self-intersection numbers determine the
//! isotropy orders of the chain through canceled continued fractions.

use crate::cox_pipeline::{ComplexityOneData, DLabel};
use crate::intlinalg::trinomial_syzygies;
use crate::presentation::{GradedPresentation, Monomial, Polynomial, Provenance};
use crate::projline::{all_distinct, P1Point};
use crate::{Error, Int, Result};
use num_traits::{One, Signed, Zero};

/// The Orlik-Wagreich graph of a K*-surface without elliptic fixed points:
/// one arm per special fiber, labelled by the negated self-intersection
/// numbers of its curves, read from the source curve towards the sink.
#[derive(Debug, Clone)]
pub struct OWGraph {
    pub arms: Vec<Arm>,
}

#[derive(Debug, Clone)]
pub struct Arm {
    pub point: P1Point,
    pub self_intersections: Vec<i64>,
}

/// Which generators of a resolution presentation get contracted away.
#[derive(Debug, Clone, Default)]
pub struct ContractionSpec {
    pub exceptional_labels: Vec<String>,
}

impl OWGraph {
    pub fn new(arms: Vec<Arm>) -> Result<Self> {
        if arms.is_empty() {
            return Err(Error::InvalidGraph("at least one arm required".into()));
        }
        if arms.iter().any(|a| a.self_intersections.is_empty()) {
            return Err(Error::InvalidGraph("every arm needs at least one curve".into()));
        }
        let points: Vec<P1Point> = arms.iter().map(|a| a.point.clone()).collect();
        if !all_distinct(&points) {
            return Err(Error::InvalidGraph("arm points must be pairwise distinct".into()));
        }
        Ok(OWGraph { arms })
    }
}

/// The continuant sequence of a list `b`: `l_0 = 0`, `l_1 = 1`,
/// `l_{j+1} = b_j l_j - l_{j-1}`. Returns `l_1, ..., l_{n+1}`, i.e. every
/// value determined by the given entries; `l_j` is the numerator of the
/// canceled continued fraction `b_1 - 1/(b_2 - 1/(... - 1/b_{j-1}))`.
pub fn continuants(b: &[i64]) -> Vec<Int> {
    let mut prev = Int::zero();
    let mut cur = Int::one();
    let mut out = vec![cur.clone()];
    for &bj in b {
        let next = Int::from(bj) * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
        out.push(cur.clone());
    }
    out
}

/// Isotropy orders of an arm with self-intersection list `b`: the first
/// `n` continuants, one per curve. Errors if any order fails to be
/// positive, which cannot happen on a genuine resolution graph.
pub fn arm_isotropy(b: &[i64]) -> Result<Vec<Int>> {
    let all = continuants(b);
    let orders = all[..b.len()].to_vec();
    if let Some(bad) = orders.iter().position(|l| !l.is_positive()) {
        return Err(Error::InvalidGraph(format!(
            "continued fraction numerator l_{} = {} is not positive",
            bad + 1,
            orders[bad]
        )));
    }
    Ok(orders)
}

/// Direct evaluation of the canceled continued fraction
/// `b_1 - 1/(b_2 - 1/(... - 1/b_k))` as an exact rational; `None` at a pole
/// (an inner tail evaluating to zero).
pub fn continued_fraction_value(b: &[i64]) -> Option<crate::Rat> {
    let mut val: Option<crate::Rat> = None;
    for &bj in b.iter().rev() {
        let b_rat = crate::util::rat(bj);
        val = Some(match val {
            None => b_rat,
            Some(v) => {
                if v.is_zero() {
                    return None;
                }
                b_rat - v.recip()
            }
        });
    }
    val
}

/// The companion continuant family with seeds `p_0 = -1`, `p_1 = 0`: the
/// numerators of the chain vertices. Together with the isotropy orders it
/// pins the character relation of the surface; the pair satisfies
/// `p_j l_{j+1} - p_{j+1} l_j = -1`, the smooth-chain condition.
pub fn arm_vertex_numerators(b: &[i64]) -> Vec<Int> {
    let mut prev = -Int::one();
    let mut cur = Int::zero();
    let mut out = vec![cur.clone()];
    for &bj in &b[..b.len().saturating_sub(1)] {
        let next = Int::from(bj) * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
        out.push(cur.clone());
    }
    out
}

fn curve_label(arm: usize, j: usize) -> String {
    if arm <= 9 && j <= 9 {
        format!("T{arm}{j}")
    } else {
        format!("T{arm}_{j}")
    }
}

/// The complexity-one data encoded by the graph: marked points with the
/// arm chains and their isotropy orders, plus the two fixed-point curves.
pub fn graph_data(graph: &OWGraph) -> Result<ComplexityOneData> {
    let mut points = Vec::new();
    let mut arms = Vec::new();
    for (i, arm) in graph.arms.iter().enumerate() {
        points.push(arm.point.clone());
        let orders = arm_isotropy(&arm.self_intersections)?;
        arms.push(
            orders
                .into_iter()
                .enumerate()
                .map(|(j, l)| DLabel { label: curve_label(i, j + 1), isotropy: l })
                .collect(),
        );
    }
    ComplexityOneData::new(points, arms, vec!["S+".to_string(), "S-".to_string()])
}

/// The Cox ring of the smooth surface described by the graph: the two
/// fixed-point curves and all chain curves as generators, trinomial
/// relations with chain exponents from the continued fractions, and the
/// saturation grading extended by the character relation (full on a smooth
/// rational surface, whose class group is free).
pub fn resolution_cox(graph: &OWGraph) -> Result<GradedPresentation> {
    let data = graph_data(graph)?;
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
    let mut labels: Vec<(String, Provenance)> =
        vec![("S+".to_string(), Provenance::FPlus), ("S-".to_string(), Provenance::FMinus)];
    for d in data.arms.iter().flatten() {
        labels.push((d.label.clone(), Provenance::DVertex));
    }
    let ungraded = GradedPresentation::ungraded(labels.clone(), relations);

    // the character relation: -S+ + S- + sum p_ij T_ij = 0, with the p's
    // the vertex-numerator continuants of each arm
    let mut character = vec![-Int::one(), Int::one()];
    for arm in &graph.arms {
        character.extend(arm_vertex_numerators(&arm.self_intersections));
    }
    // the fiber monomials all share the class of a fiber; for three or more
    // arms the trinomials already force this, for two arms it must be added
    let order: Vec<String> = labels.iter().map(|(l, _)| l.clone()).collect();
    let mut aux = vec![character];
    aux.extend(crate::presentation::exponent_difference_rows(&slots, &order));
    ungraded.saturation_grading_with(&aux, true)
}

/// Sets the exceptional generators to one: the Cox ring of the contracted
/// singular surface, ungraded (torsion in the class group cannot be
/// recovered from the presentation alone; use the fan route for degrees).
pub fn contract(
    presentation: &GradedPresentation,
    spec: &ContractionSpec,
) -> Result<GradedPresentation> {
    presentation.substitute_one(&spec.exceptional_labels)
}

/// Monomial slots after contraction, for row-space comparisons.
pub fn contracted_slots(data: &ComplexityOneData, spec: &ContractionSpec) -> Vec<Monomial> {
    data.slot_monomials()
        .iter()
        .map(|m| m.without(&spec.exceptional_labels))
        .collect()
}
