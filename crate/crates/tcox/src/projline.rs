//! Points of the rational projective line with a chosen representative.
//!
//! The representative pair matters: trinomial coefficients are 2x2 minors of
//! the chosen representatives, so a point remembers the exact pair it was
//! constructed with while comparing and ordering projectively.

use crate::util::fmt_rat;
use crate::{Error, Rat, Result};
use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;

/// A point `[b : c]` of the projective line over the rationals.
#[derive(Debug, Clone)]
pub struct P1Point {
    b: Rat,
    c: Rat,
}

/// Canonical form of a point: either a finite value `c/b` or infinity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum NormalForm {
    Finite(Rat),
    Infinity,
}

impl P1Point {
    pub fn new(b: Rat, c: Rat) -> Result<Self> {
        if b.is_zero() && c.is_zero() {
            return Err(Error::DegeneratePoints("[0 : 0] is not a point".into()));
        }
        Ok(P1Point { b, c })
    }

    pub fn from_ints(b: i64, c: i64) -> Self {
        P1Point::new(crate::util::rat(b), crate::util::rat(c)).expect("nonzero representative")
    }

    /// The representative pair exactly as given at construction time.
    pub fn representative(&self) -> (&Rat, &Rat) {
        (&self.b, &self.c)
    }

    /// The affine value `b/c` for finite points, infinity for `[1 : 0]`.
    pub fn normal_form(&self) -> NormalForm {
        if self.c.is_zero() {
            NormalForm::Infinity
        } else {
            NormalForm::Finite(&self.b / &self.c)
        }
    }

    pub fn same_point(&self, other: &P1Point) -> bool {
        // projective equality: vanishing of the 2x2 minor
        (&self.b * &other.c - &self.c * &other.b).is_zero()
    }
}

/// Ordering used everywhere marked points are listed: finite points by their
/// value, infinity last. This pins generator numbering independently of
/// input order.
impl Ord for P1Point {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.normal_form(), other.normal_form()) {
            (NormalForm::Finite(a), NormalForm::Finite(b)) => a.cmp(&b),
            (NormalForm::Finite(_), NormalForm::Infinity) => Ordering::Less,
            (NormalForm::Infinity, NormalForm::Finite(_)) => Ordering::Greater,
            (NormalForm::Infinity, NormalForm::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for P1Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for P1Point {
    fn eq(&self, other: &Self) -> bool {
        self.same_point(other)
    }
}

impl Eq for P1Point {}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {}]", fmt_rat(&self.b), fmt_rat(&self.c))
    }
}

/// Checks pairwise projective distinctness.
pub fn all_distinct(points: &[P1Point]) -> bool {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i].same_point(&points[j]) {
                return false;
            }
        }
    }
    true
}
