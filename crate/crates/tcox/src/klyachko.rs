//! Cox rings of projectivized rank-two equivariant bundles and of
//! projectivized tangent sheaves over complete toric varieties, from
//! filtration data.
//!
//! The input per ray is the pair of jump indices of the increasing
//! filtration together with the first-jump line when the jumps are distinct;
//! nothing else of the filtration enters the presentation.

use crate::cox_pipeline::{ComplexityOneData, DLabel};
use crate::intlinalg::{kernel_basis, syz2, IntMatrix};
use crate::presentation::{GradedPresentation, Monomial, Polynomial, Provenance};
use crate::projline::P1Point;
use crate::{Error, Int, Rat, Result};
use num_traits::Zero;

/// One ray of the base fan with the rank-two filtration invariants: the
/// primitive ray generator, the two jump indices `i0 <= i1`, and the line
/// of the first jump whenever `i0 < i1`.
#[derive(Debug, Clone)]
pub struct BundleRay {
    pub ray: Vec<Int>,
    pub i0: i64,
    pub i1: i64,
    pub line: Option<P1Point>,
}

/// Filtration data of a rank-two equivariant bundle over a complete toric
/// variety. Completeness of the base fan is the caller's assertion.
#[derive(Debug, Clone)]
pub struct Rank2BundleData {
    pub ambient_rank: usize,
    pub rays: Vec<BundleRay>,
}

/// The rays of a complete fan, for the tangent-sheaf construction.
#[derive(Debug, Clone)]
pub struct ToricFanRays {
    pub ambient_rank: usize,
    pub rays: Vec<Vec<Int>>,
}

impl Rank2BundleData {
    pub fn new(ambient_rank: usize, rays: Vec<BundleRay>) -> Result<Self> {
        if ambient_rank == 0 {
            return Err(Error::schema("lattice_rank", "ambient rank must be positive"));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.ray.len() != ambient_rank {
                return Err(Error::AmbientMismatch(r.ray.len(), ambient_rank));
            }
            if r.ray.iter().all(Zero::is_zero) {
                return Err(Error::ZeroVector);
            }
            if r.i0 > r.i1 {
                return Err(Error::schema("i0", "jump indices must satisfy i0 <= i1"));
            }
            if r.i0 < r.i1 && r.line.is_none() {
                return Err(Error::MissingLine(crate::util::fmt_ivec(&r.ray)));
            }
            for other in &rays[..i] {
                if other.ray == r.ray {
                    return Err(Error::DegeneratePoints(format!(
                        "ray {} listed twice",
                        crate::util::fmt_ivec(&r.ray)
                    )));
                }
            }
        }
        Ok(Rank2BundleData { ambient_rank, rays })
    }
}

impl ToricFanRays {
    pub fn new(ambient_rank: usize, rays: Vec<Vec<Int>>) -> Result<Self> {
        if rays.len() < 2 {
            return Err(Error::schema("rays", "a complete fan has at least two rays"));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != ambient_rank {
                return Err(Error::AmbientMismatch(r.len(), ambient_rank));
            }
            if r.iter().all(Zero::is_zero) {
                return Err(Error::ZeroVector);
            }
            for other in &rays[..i] {
                if other == r {
                    return Err(Error::DegeneratePoints(format!(
                        "ray {} listed twice",
                        crate::util::fmt_ivec(r)
                    )));
                }
            }
        }
        Ok(ToricFanRays { ambient_rank, rays })
    }
}

/// A presentation together with the complexity-one shape of its generators,
/// used downstream for canonical classes and slot comparisons.
#[derive(Debug, Clone)]
pub struct BundleCox {
    pub presentation: GradedPresentation,
    pub data: ComplexityOneData,
    /// Whether the generic-orbit quotient is a line, so the marked points
    /// carry honest representatives and the complexity-one formulas apply.
    /// True for rank-two bundles and for tangent sheaves of surfaces.
    pub complexity_one: bool,
}

/// The Cox ring of the projectivization of a rank-two bundle. Generators:
/// one `S` per ray and one `T` per distinct jump line; relations: one per
/// syzygy of the line representatives, with each line's `T` multiplied by
/// the product of `S_rho^{i1 - i0}` over the rays jumping along it. Rays
/// with equal jumps contribute bare generators; with fewer than two lines
/// the fiber coordinates are completed by free generators.
pub fn projectivization_cox(data: &Rank2BundleData, smooth_base: bool) -> Result<BundleCox> {
    // canonical ray order pins the labels
    let mut order: Vec<usize> = (0..data.rays.len()).collect();
    order.sort_by(|&a, &b| data.rays[a].ray.cmp(&data.rays[b].ray));
    let s_label = |pos: usize| format!("S{}", pos + 1);

    // distinct lines in canonical order
    let mut lines: Vec<P1Point> = Vec::new();
    for &i in &order {
        if let Some(line) = &data.rays[i].line {
            if data.rays[i].i0 < data.rays[i].i1 && !lines.iter().any(|l| l.same_point(line)) {
                lines.push(line.clone());
            }
        }
    }
    lines.sort();

    // arms: per line, its T variable and the S variables jumping along it
    let mut points: Vec<P1Point> = lines.clone();
    let mut arms: Vec<Vec<DLabel>> = Vec::new();
    for (t, line) in lines.iter().enumerate() {
        let mut arm = vec![DLabel { label: format!("T{}", t + 1), isotropy: Int::from(1) }];
        for (pos, &i) in order.iter().enumerate() {
            let r = &data.rays[i];
            if r.i0 < r.i1 && r.line.as_ref().is_some_and(|l| l.same_point(line)) {
                arm.push(DLabel { label: s_label(pos), isotropy: Int::from(r.i1 - r.i0) });
            }
        }
        arms.push(arm);
    }
    // fewer than two lines: complete the fiber with free generators at
    // fresh points so the fiber coordinate ring is not lost
    let mut aug = 0usize;
    while points.len() < 2 {
        aug += 1;
        let fresh = fresh_point(&points);
        points.push(fresh);
        arms.push(vec![DLabel { label: format!("F{aug}"), isotropy: Int::from(1) }]);
    }

    // bare rays (equal jumps) sit outside the generic-orbit locus
    let e_labels: Vec<String> = order
        .iter()
        .enumerate()
        .filter(|(_, &i)| data.rays[i].i0 == data.rays[i].i1)
        .map(|(pos, _)| s_label(pos))
        .collect();

    let cdata = ComplexityOneData::new(points.clone(), arms, e_labels)?;

    // relations: syzygies of the line representatives over the slots
    let reps: Vec<(Rat, Rat)> = points
        .iter()
        .map(|p| {
            let (b, c) = p.representative();
            (b.clone(), c.clone())
        })
        .collect();
    let syzygies = syz2(&reps)?;
    let slots = cdata.slot_monomials();
    let relations: Vec<Polynomial> = syzygies
        .iter()
        .map(|row| {
            Polynomial::from_terms(
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (slots[i].clone(), Rat::from_integer(c.clone())))
                    .collect(),
            )
        })
        .collect();

    let mut labels: Vec<(String, Provenance)> = Vec::new();
    for (pos, _) in order.iter().enumerate() {
        labels.push((s_label(pos), Provenance::BundleS));
    }
    for arm in &cdata.arms {
        for d in arm {
            if !labels.iter().any(|(l, _)| *l == d.label) {
                labels.push((d.label.clone(), Provenance::BundleT));
            }
        }
    }
    let ungraded = GradedPresentation::ungraded(labels.clone(), relations);

    // auxiliary grading relations: the base character rows on the S
    // variables, and equality of the fiber monomials across the slots
    let label_list: Vec<String> = labels.iter().map(|(l, _)| l.clone()).collect();
    let mut aux: Vec<Vec<Int>> = Vec::new();
    for k in 0..data.ambient_rank {
        let mut row = vec![Int::zero(); label_list.len()];
        for (pos, &i) in order.iter().enumerate() {
            row[label_list.iter().position(|l| *l == s_label(pos)).unwrap()] =
                data.rays[i].ray[k].clone();
        }
        aux.push(row);
    }
    aux.extend(slot_differences(&slots, &label_list));

    let presentation = ungraded.saturation_grading_with(&aux, smooth_base)?;
    Ok(BundleCox { presentation, data: cdata, complexity_one: true })
}

/// The Cox ring of the projectivized tangent sheaf of a smooth complete
/// toric variety: one `S` per ray, one `T` per ray class modulo sign, and
/// one relation per integer syzygy of the class representatives, each `T`
/// multiplied by `S_rho S_{-rho}` when both signs are rays.
pub fn cotangent_cox(fan: &ToricFanRays) -> Result<BundleCox> {
    let mut order: Vec<usize> = (0..fan.rays.len()).collect();
    order.sort_by(|&a, &b| fan.rays[a].cmp(&fan.rays[b]));
    let s_label = |pos: usize| format!("S{}", pos + 1);
    let pos_of = |ray: &Vec<Int>| -> Option<usize> { order.iter().position(|&i| &fan.rays[i] == ray) };

    // one representative per +/- pair: the lexicographically larger one
    let mut reps: Vec<Vec<Int>> = Vec::new();
    for &i in &order {
        let ray = &fan.rays[i];
        let neg: Vec<Int> = ray.iter().map(|x| -x).collect();
        if pos_of(&neg).is_some() && *ray < neg {
            continue;
        }
        reps.push(ray.clone());
    }

    // on a surface the ray classes are honest points of the line and the
    // syzygies annihilate their representatives; in higher rank the points
    // are synthetic placeholders for slot bookkeeping only
    let complexity_one = fan.ambient_rank == 2;
    let mut arms: Vec<Vec<DLabel>> = Vec::new();
    let mut points: Vec<P1Point> = Vec::new();
    for (t, rep) in reps.iter().enumerate() {
        let mut arm = vec![DLabel { label: format!("T{}", t + 1), isotropy: Int::from(1) }];
        let rep_pos = pos_of(rep).expect("representative is a ray");
        arm.push(DLabel { label: s_label(rep_pos), isotropy: Int::from(1) });
        let neg: Vec<Int> = rep.iter().map(|x| -x).collect();
        if let Some(neg_pos) = pos_of(&neg) {
            arm.push(DLabel { label: s_label(neg_pos), isotropy: Int::from(1) });
        }
        arms.push(arm);
        if complexity_one {
            points.push(P1Point::new(
                Rat::from_integer(rep[0].clone()),
                Rat::from_integer(rep[1].clone()),
            )?);
        } else {
            points.push(fresh_point(&points));
        }
    }
    let cdata = ComplexityOneData::new(points, arms, Vec::new())?;

    // integer syzygies of the representatives
    let cols = reps.len();
    let mut m = IntMatrix::zero(fan.ambient_rank, cols);
    for (j, rep) in reps.iter().enumerate() {
        for k in 0..fan.ambient_rank {
            m[(k, j)] = rep[k].clone();
        }
    }
    let syzygies = kernel_basis(&m);
    let slots = cdata.slot_monomials();
    let relations: Vec<Polynomial> = syzygies
        .iter()
        .map(|row| {
            Polynomial::from_terms(
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (slots[i].clone(), Rat::from_integer(c.clone())))
                    .collect(),
            )
        })
        .collect();

    let mut labels: Vec<(String, Provenance)> = Vec::new();
    for (pos, _) in order.iter().enumerate() {
        labels.push((s_label(pos), Provenance::BundleS));
    }
    for t in 0..reps.len() {
        labels.push((format!("T{}", t + 1), Provenance::BundleT));
    }
    let ungraded = GradedPresentation::ungraded(labels.clone(), relations);

    let label_list: Vec<String> = labels.iter().map(|(l, _)| l.clone()).collect();
    let mut aux: Vec<Vec<Int>> = Vec::new();
    for k in 0..fan.ambient_rank {
        let mut row = vec![Int::zero(); label_list.len()];
        for (pos, &i) in order.iter().enumerate() {
            row[pos] = fan.rays[i][k].clone();
        }
        aux.push(row);
    }
    aux.extend(slot_differences(&slots, &label_list));

    let presentation = ungraded.saturation_grading_with(&aux, true)?;
    Ok(BundleCox { presentation, data: cdata, complexity_one })
}

/// Exponent differences of the slot monomials: the fiber monomials all
/// share the relative hyperplane class.
fn slot_differences(slots: &[Monomial], order: &[String]) -> Vec<Vec<Int>> {
    crate::presentation::exponent_difference_rows(slots, order)
}

/// A rational point distinct from all listed ones.
fn fresh_point(existing: &[P1Point]) -> P1Point {
    let mut k: i64 = 0;
    loop {
        let cand = P1Point::from_ints(1, k);
        if !existing.iter().any(|p| p.same_point(&cand)) {
            return cand;
        }
        k += 1;
    }
}

/// Multilinearity check used by the tests and the catalog: every monomial
/// of every relation contains exactly one fiber variable, with exponent 1.
pub fn relations_are_t_multilinear(p: &GradedPresentation) -> bool {
    let t_labels: Vec<String> = p
        .generators
        .iter()
        .filter(|g| g.tag == Provenance::BundleT)
        .map(|g| g.label.clone())
        .collect();
    p.relations.iter().all(|rel| {
        rel.terms().all(|(m, _)| {
            let tcount: u32 = t_labels.iter().map(|l| m.exponent_of(l)).sum();
            tcount == 1
        })
    })
}

/// Degree split of the generators: sorted sizes of the degree classes.
pub fn degree_class_sizes(p: &GradedPresentation) -> Vec<usize> {
    let mut classes: Vec<(String, usize)> = Vec::new();
    for g in &p.generators {
        let key = g.degree.as_ref().map(|d| format!("{d}")).unwrap_or_default();
        match classes.iter_mut().find(|(k, _)| *k == key) {
            Some((_, n)) => *n += 1,
            None => classes.push((key, 1)),
        }
    }
    let mut sizes: Vec<usize> = classes.into_iter().map(|(_, n)| n).collect();
    sizes.sort();
    sizes
}
