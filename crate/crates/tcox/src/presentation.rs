//! Graded ring presentations: labelled generators with degrees in a
//! finitely generated abelian group, sparse multivariate relations with
//! rational coefficients, homogeneity and complete-intersection checks,
//! variable substitution, and saturation gradings.

use crate::intlinalg::{cokernel, kernel_basis, FGAbelianGroup, GroupElement, IntMatrix};
use crate::util::fmt_rat;
use crate::{Error, Int, Rat, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A monomial: exponent map from generator labels to positive exponents.
/// Zero exponents are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_pairs(pairs: &[(&str, u32)]) -> Self {
        let mut m = BTreeMap::new();
        for (label, e) in pairs {
            if *e > 0 {
                *m.entry(label.to_string()).or_insert(0) += e;
            }
        }
        Monomial(m)
    }

    pub fn mul_var(&mut self, label: &str, e: u32) {
        if e > 0 {
            *self.0.entry(label.to_string()).or_insert(0) += e;
        }
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&String, &u32)> {
        self.0.iter()
    }

    pub fn exponent_of(&self, label: &str) -> u32 {
        self.0.get(label).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0.clone();
        for (l, e) in &other.0 {
            *m.entry(l.clone()).or_insert(0) += e;
        }
        Monomial(m)
    }

    /// Drop the listed variables (set them to one).
    pub fn without(&self, labels: &[String]) -> Monomial {
        Monomial(self.0.iter().filter(|(l, _)| !labels.contains(l)).map(|(l, e)| (l.clone(), *e)).collect())
    }

    /// Exponent vector over an ordered label list.
    pub fn exponent_vector(&self, order: &[String]) -> Vec<Int> {
        order.iter().map(|l| Int::from(self.exponent_of(l))).collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(l, e)| if *e == 1 { l.clone() } else { format!("{l}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A polynomial: monomials with nonzero rational coefficients, kept in the
/// canonical monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial(BTreeMap<Monomial, Rat>);

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn from_terms(terms: Vec<(Monomial, Rat)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    /// Set the listed variables to one, merging coefficients.
    pub fn substitute_one(&self, labels: &[String]) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in &self.0 {
            p.add_term(m.without(labels), c.clone());
        }
        p
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.0 {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{}", fmt_rat(c), m)?;
            }
        }
        Ok(())
    }
}

/// Where a generator came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ERay,
    DVertex,
    FPlus,
    FMinus,
    BundleS,
    BundleT,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::ERay => "E-ray",
            Provenance::DVertex => "D-vertex",
            Provenance::FPlus => "F-plus",
            Provenance::FMinus => "F-minus",
            Provenance::BundleS => "bundle-S",
            Provenance::BundleT => "bundle-T",
        }
    }
}

/// How much of the class-group grading a presentation carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GradingStatus {
    /// Degrees live in the full divisor class group, torsion included.
    Full,
    /// Degrees only capture the free part of the class group.
    FreePartOnly,
    Ungraded,
}

#[derive(Debug, Clone)]
pub struct Generator {
    pub label: String,
    pub degree: Option<GroupElement>,
    pub tag: Provenance,
}

/// A graded presentation of a ring: ordered labelled generators, their
/// degrees, and the defining relations.
#[derive(Debug, Clone)]
pub struct GradedPresentation {
    pub grading: Option<FGAbelianGroup>,
    pub status: GradingStatus,
    pub generators: Vec<Generator>,
    pub relations: Vec<Polynomial>,
}

impl GradedPresentation {
    pub fn ungraded(labels: Vec<(String, Provenance)>, relations: Vec<Polynomial>) -> Self {
        GradedPresentation {
            grading: None,
            status: GradingStatus::Ungraded,
            generators: labels
                .into_iter()
                .map(|(label, tag)| Generator { label, degree: None, tag })
                .collect(),
            relations,
        }
    }

    pub fn labels(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.label.clone()).collect()
    }

    pub fn generator(&self, label: &str) -> Result<&Generator> {
        self.generators
            .iter()
            .find(|g| g.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Degree of a monomial: the exponent-weighted sum of generator degrees.
    pub fn degree_of(&self, m: &Monomial) -> Result<GroupElement> {
        if self.status == GradingStatus::Ungraded {
            return Err(Error::MissingDegree("presentation is ungraded".into()));
        }
        let group = self.grading.as_ref().expect("graded presentation carries its group");
        let mut acc = group.zero_element();
        for (label, e) in m.exponents() {
            let gen = self.generator(label)?;
            let deg = gen
                .degree
                .as_ref()
                .ok_or_else(|| Error::MissingDegree(label.clone()))?;
            acc = acc.add(&deg.scale(&Int::from(*e)))?;
        }
        Ok(acc)
    }

    /// Every relation's monomials share one degree.
    pub fn is_homogeneous(&self) -> Result<bool> {
        for rel in &self.relations {
            let mut expect: Option<GroupElement> = None;
            for (m, _) in rel.terms() {
                let d = self.degree_of(m)?;
                match &expect {
                    None => expect = Some(d),
                    Some(e) => {
                        if *e != d {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Number of generators minus number of relations: the dimension of the
    /// presented ring when it is a complete intersection.
    pub fn ci_dimension(&self) -> i64 {
        self.generators.len() as i64 - self.relations.len() as i64
    }

    /// Set the listed generators to one and remove them. The result is
    /// ungraded: degrees cannot be transported through the substitution.
    pub fn substitute_one(&self, labels: &[String]) -> Result<GradedPresentation> {
        for l in labels {
            self.generator(l)?;
        }
        let generators: Vec<Generator> = self
            .generators
            .iter()
            .filter(|g| !labels.contains(&g.label))
            .map(|g| Generator { label: g.label.clone(), degree: None, tag: g.tag })
            .collect();
        let relations: Vec<Polynomial> = self
            .relations
            .iter()
            .map(|r| r.substitute_one(labels))
            .filter(|r| !r.is_zero())
            .collect();
        Ok(GradedPresentation {
            grading: None,
            status: GradingStatus::Ungraded,
            generators,
            relations,
        })
    }

    /// Exponent-vector differences of monomials within each relation, over
    /// the generator order.
    fn relation_differences(&self) -> Vec<Vec<Int>> {
        let order = self.labels();
        let mut rows = Vec::new();
        for rel in &self.relations {
            let vecs: Vec<Vec<Int>> =
                rel.terms().map(|(m, _)| m.exponent_vector(&order)).collect();
            for w in vecs.windows(2) {
                rows.push(w[1].iter().zip(&w[0]).map(|(a, b)| a - b).collect());
            }
        }
        rows
    }

    /// The universal grading in which all relations are homogeneous:
    /// the quotient of the free abelian group on the generators by the
    /// saturation of the lattice spanned by relation differences plus any
    /// caller-supplied auxiliary relations. The result is free; it is the
    /// full class-group grading exactly when the class group is free, so it
    /// is marked `Full` only under the caller's smoothness assertion.
    pub fn saturation_grading_with(
        &self,
        auxiliary_rows: &[Vec<Int>],
        smooth: bool,
    ) -> Result<GradedPresentation> {
        let n = self.generators.len();
        let mut rows = self.relation_differences();
        for r in auxiliary_rows {
            if r.len() != n {
                return Err(Error::AmbientMismatch(r.len(), n));
            }
            rows.push(r.clone());
        }
        // saturate: double orthogonal over the integers
        let sat: Vec<Vec<Int>> = if rows.is_empty() {
            Vec::new()
        } else {
            let complement = kernel_basis(&IntMatrix::from_rows(rows));
            if complement.is_empty() {
                // full-rank relation lattice: the quotient is trivial
                (0..n)
                    .map(|j| {
                        let mut e = vec![Int::zero(); n];
                        e[j] = Int::one();
                        e
                    })
                    .collect()
            } else {
                kernel_basis(&IntMatrix::from_rows(complement))
            }
        };
        let coker = if sat.is_empty() {
            cokernel(&IntMatrix::zero(0, n))
        } else {
            cokernel(&IntMatrix::from_rows(sat))
        };
        debug_assert!(coker.group.is_free(), "saturated lattice quotient must be free");
        let generators: Vec<Generator> = self
            .generators
            .iter()
            .zip(&coker.degrees)
            .map(|(g, d)| Generator { label: g.label.clone(), degree: Some(d.clone()), tag: g.tag })
            .collect();
        let status = if smooth { GradingStatus::Full } else { GradingStatus::FreePartOnly };
        let out = GradedPresentation {
            grading: Some(coker.group),
            status,
            generators,
            relations: self.relations.clone(),
        };
        debug_assert!(out.is_homogeneous().unwrap_or(false));
        Ok(out)
    }

    pub fn saturation_grading(&self, smooth: bool) -> Result<GradedPresentation> {
        self.saturation_grading_with(&[], smooth)
    }

    /// Coefficient matrix of the relations over a fixed list of slot
    /// monomials; fails if some relation uses a monomial outside the slots.
    pub fn coefficient_matrix(&self, slots: &[Monomial]) -> Option<Vec<Vec<Rat>>> {
        let mut rows = Vec::new();
        for rel in &self.relations {
            let mut row = vec![Rat::zero(); slots.len()];
            for (m, c) in rel.terms() {
                let idx = slots.iter().position(|s| s == m)?;
                row[idx] = c.clone();
            }
            rows.push(row);
        }
        Some(rows)
    }

    /// Plain-text ideal listing: variable list, degree list, relations.
    pub fn ideal_text(&self) -> String {
        let mut out = String::new();
        let labels = self.labels();
        out.push_str(&format!("variables: {}\n", labels.join(", ")));
        match &self.grading {
            Some(g) => {
                out.push_str(&format!(
                    "grading group: {} ({})\n",
                    g,
                    match self.status {
                        GradingStatus::Full => "full",
                        GradingStatus::FreePartOnly => "free part only",
                        GradingStatus::Ungraded => "ungraded",
                    }
                ));
                for gen in &self.generators {
                    if let Some(d) = &gen.degree {
                        out.push_str(&format!("deg {} = {}\n", gen.label, d));
                    }
                }
            }
            None => out.push_str("grading group: none (ungraded)\n"),
        }
        if self.relations.is_empty() {
            out.push_str("ideal: (0)\n");
        } else {
            out.push_str("ideal:\n");
            for r in &self.relations {
                out.push_str(&format!("  {r}\n"));
            }
        }
        out
    }
}

/// Row-space equality of two relation sets over a common slot basis.
pub fn same_row_space(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> bool {
    crate::util::rref(a) == crate::util::rref(b)
}

/// Exponent differences of consecutive monomials over a label order: the
/// rows forcing all listed monomials into one degree class.
pub fn exponent_difference_rows(monomials: &[Monomial], order: &[String]) -> Vec<Vec<Int>> {
    let vecs: Vec<Vec<Int>> = monomials.iter().map(|m| m.exponent_vector(order)).collect();
    vecs.windows(2).map(|w| w[1].iter().zip(&w[0]).map(|(a, b)| a - b).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::{int, rat, ratio};

    fn mono(pairs: &[(&str, u32)]) -> Monomial {
        Monomial::from_pairs(pairs)
    }

    /// The contracted degree-one surface presentation with its published
    /// torsion-aware degrees, used across the tests.
    fn presentation_2d4() -> GradedPresentation {
        let group = FGAbelianGroup::new(1, vec![int(2), int(2)]);
        let deg = |f: i64, t1: i64, t2: i64| group.element(vec![int(f)], vec![int(t1), int(t2)]);
        let degs = [deg(1, 1, 0), deg(1, 1, 0), deg(1, 1, 1), deg(1, 0, 0), deg(1, 0, 1)];
        let generators = (1..=5)
            .map(|i| Generator {
                label: format!("T{i}"),
                degree: Some(degs[i - 1].clone()),
                tag: Provenance::DVertex,
            })
            .collect();
        let relations = vec![
            Polynomial::from_terms(vec![
                (mono(&[("T1", 1), ("T2", 1)]), rat(1)),
                (mono(&[("T3", 2)]), rat(1)),
                (mono(&[("T4", 2)]), rat(1)),
            ]),
            Polynomial::from_terms(vec![
                (mono(&[("T3", 2)]), ratio(1, 2)),
                (mono(&[("T4", 2)]), rat(1)),
                (mono(&[("T5", 2)]), rat(1)),
            ]),
        ];
        GradedPresentation {
            grading: Some(group),
            status: GradingStatus::Full,
            generators,
            relations,
        }
    }

    #[test]
    fn degree_of_monomials() {
        let p = presentation_2d4();
        let group = p.grading.clone().unwrap();
        assert_eq!(p.degree_of(&Monomial::one()).unwrap(), group.zero_element());
        let sq = p.degree_of(&mono(&[("T3", 2)])).unwrap();
        assert_eq!(sq, group.element(vec![int(2)], vec![int(0), int(0)]));
        assert_eq!(p.degree_of(&mono(&[("T1", 1), ("T2", 1)])).unwrap(), sq);
        assert!(p.degree_of(&mono(&[("X", 1)])).is_err());
    }

    #[test]
    fn degree_of_is_additive() {
        let p = presentation_2d4();
        let a = mono(&[("T1", 1), ("T3", 2)]);
        let b = mono(&[("T2", 3), ("T5", 1)]);
        let sum = p
            .degree_of(&a)
            .unwrap()
            .add(&p.degree_of(&b).unwrap())
            .unwrap();
        assert_eq!(p.degree_of(&a.mul(&b)).unwrap(), sum);
    }

    #[test]
    fn homogeneity() {
        let p = presentation_2d4();
        assert!(p.is_homogeneous().unwrap());
        // corrupt one degree
        let mut bad = p.clone();
        let group = bad.grading.clone().unwrap();
        bad.generators[0].degree = Some(group.element(vec![int(2)], vec![int(0), int(0)]));
        assert!(!bad.is_homogeneous().unwrap());
        // no relations: homogeneous
        let empty = GradedPresentation {
            relations: Vec::new(),
            ..presentation_2d4()
        };
        assert!(empty.is_homogeneous().unwrap());
    }

    #[test]
    fn ci_dimension_counts() {
        let p = presentation_2d4();
        assert_eq!(p.ci_dimension(), 3);
        let poly_ring = GradedPresentation { relations: Vec::new(), ..presentation_2d4() };
        assert_eq!(poly_ring.ci_dimension(), 5);
    }

    #[test]
    fn substitution_merges_and_degrades() {
        // the resolution-shaped relation T01*T02 + T11*T12^2*T13 + ...,
        // with the chain variables set to one
        let labels = vec![
            ("T01".to_string(), Provenance::DVertex),
            ("T02".to_string(), Provenance::DVertex),
            ("T11".to_string(), Provenance::DVertex),
            ("T12".to_string(), Provenance::DVertex),
            ("T13".to_string(), Provenance::DVertex),
        ];
        let rel = Polynomial::from_terms(vec![
            (mono(&[("T01", 1), ("T02", 1)]), rat(1)),
            (mono(&[("T11", 1), ("T12", 2), ("T13", 1)]), rat(1)),
        ]);
        let p = GradedPresentation::ungraded(labels, vec![rel]);
        let q = p.substitute_one(&["T11".to_string(), "T13".to_string()]).unwrap();
        assert_eq!(q.generators.len(), 3);
        assert_eq!(q.relations.len(), 1);
        let expect = Polynomial::from_terms(vec![
            (mono(&[("T01", 1), ("T02", 1)]), rat(1)),
            (mono(&[("T12", 2)]), rat(1)),
        ]);
        assert_eq!(q.relations[0], expect);
        assert_eq!(q.status, GradingStatus::Ungraded);
        // empty label set: identity on relations
        let same = p.substitute_one(&[]).unwrap();
        assert_eq!(same.relations, p.relations);
        assert!(p.substitute_one(&["nope".to_string()]).is_err());
    }

    #[test]
    fn saturation_grading_of_tangent_relation() {
        // single relation T1*S1 + T2*S2 + T3*S3
        let labels: Vec<(String, Provenance)> = ["S1", "S2", "S3", "T1", "T2", "T3"]
            .iter()
            .map(|l| (l.to_string(), Provenance::BundleS))
            .collect();
        let rel = Polynomial::from_terms(vec![
            (mono(&[("S1", 1), ("T1", 1)]), rat(1)),
            (mono(&[("S2", 1), ("T2", 1)]), rat(1)),
            (mono(&[("S3", 1), ("T3", 1)]), rat(1)),
        ]);
        let p = GradedPresentation::ungraded(labels, vec![rel]);
        let g = p.saturation_grading(true).unwrap();
        // differences alone leave rank 4
        assert_eq!(g.grading.as_ref().unwrap().free_rank, 4);
        assert!(g.is_homogeneous().unwrap());
        assert_eq!(g.status, GradingStatus::Full);

        // no relations: the full free group on the generators
        let free = GradedPresentation::ungraded(
            vec![("A".to_string(), Provenance::BundleT), ("B".to_string(), Provenance::BundleT)],
            Vec::new(),
        );
        let gf = free.saturation_grading(false).unwrap();
        assert_eq!(gf.grading.as_ref().unwrap().free_rank, 2);
        assert_eq!(gf.status, GradingStatus::FreePartOnly);
    }

    #[test]
    fn saturation_on_singular_target_is_free_part_only() {
        // the contracted surface presentation: true class group has rank 1
        // plus torsion; the saturation grading has rank 2 and must refuse
        // to call itself full without the smoothness assertion
        let p = presentation_2d4();
        let ungraded = GradedPresentation {
            grading: None,
            status: GradingStatus::Ungraded,
            generators: p
                .generators
                .iter()
                .map(|g| Generator { label: g.label.clone(), degree: None, tag: g.tag })
                .collect(),
            relations: p.relations.clone(),
        };
        let g = ungraded.saturation_grading(false).unwrap();
        assert_eq!(g.grading.as_ref().unwrap().free_rank, 2);
        assert_eq!(g.status, GradingStatus::FreePartOnly);
        assert!(g.is_homogeneous().unwrap());
    }

    #[test]
    fn row_space_comparison_is_representative_independent() {
        let a = vec![vec![rat(1), rat(1), rat(1)]];
        let b = vec![vec![rat(-2), rat(-2), rat(-2)]];
        assert!(same_row_space(&a, &b));
        let c = vec![vec![rat(1), rat(0), rat(0)]];
        assert!(!same_row_space(&a, &c));
    }

    #[test]
    fn substitution_is_idempotent_on_disjoint_sets() {
        let p = presentation_2d4();
        let once = p.substitute_one(&["T1".to_string()]).unwrap();
        let twice = once.substitute_one(&["T5".to_string()]).unwrap();
        let direct = p.substitute_one(&["T1".to_string(), "T5".to_string()]).unwrap();
        assert_eq!(twice.relations, direct.relations);
    }
}
