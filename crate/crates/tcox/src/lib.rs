//! Cox rings of complete rational varieties with a torus action of
//! complexity one.
//!
//! Three combinatorial input dialects are supported, all over the rationals:
//!
//! * divisorial fans on the projective line (polyhedral divisors with
//!   sigma-polyhedron coefficients),
//! * Orlik-Wagreich graphs of smooth complete rational K*-surfaces,
//! * rank-two Klyachko filtration data and cotangent data over complete
//!   toric varieties.
//!
//! From each of these the crate produces a graded presentation of the Cox
//! ring (labelled generators with degrees in a finitely generated abelian
//! group, trinomial relations with rational coefficients), the divisor class
//! group, a canonical class and the moving cone.
//!
//! All arithmetic is exact. There is no floating point anywhere in the
//! crate; rationals are `num_rational::BigRational` and integers are
//! `num_bigint::BigInt`.

pub mod catalog;
pub mod cox_pipeline;
pub mod intlinalg;
pub mod io;
pub mod klyachko;
pub mod orlik_wagreich;
pub mod pdiv;
pub mod polyhedra;
pub mod presentation;
pub mod projline;

pub(crate) mod util;

/// Exact integer type used throughout.
pub type Int = num_bigint::BigInt;
/// Exact rational type used throughout.
pub type Rat = num_rational::BigRational;

/// Crate-wide error type. Messages use the vocabulary of the underlying
/// geometry so the CLI can surface them directly.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ambient rank mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("tail cones do not agree, Minkowski sum undefined")]
    TailMismatch,
    #[error("weight lies outside the dual tail cone: evaluation is unbounded below")]
    UnboundedBelow,
    #[error("the empty polyhedron has no support minimum")]
    EmptyPolyhedron,
    #[error("degenerate point configuration: {0}")]
    DegeneratePoints(String),
    #[error("divisor has an empty coefficient, its locus is not complete")]
    NonCompleteLocus,
    #[error("tail cone of a polyhedral divisor must be pointed")]
    TailNotPointed,
    #[error("invalid Orlik-Wagreich graph: {0}")]
    InvalidGraph(String),
    #[error("invalid divisorial fan: {0}")]
    InvalidFan(String),
    #[error("unknown generator label `{0}`")]
    UnknownLabel(String),
    #[error("filtration at ray {0} jumps by one but carries no line")]
    MissingLine(String),
    #[error("no degree supplied for generator `{0}` (or for the base class)")]
    MissingDegree(String),
    #[error("arm index {index} out of range 0..={max}")]
    ArmIndexOutOfRange { index: usize, max: usize },
    #[error("the zero vector has no primitive representative")]
    ZeroVector,
    #[error("properness criterion deg(D) strictly contained in tail(D) failed for divisor #{0}; the criterion is sufficient only, but divisors failing it are rejected")]
    NotProper(usize),
    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("schema error at `{field}`: {message}")]
    Schema { field: String, message: String },
}

impl Error {
    pub(crate) fn schema(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema { field: field.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
