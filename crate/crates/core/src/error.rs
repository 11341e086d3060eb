use thiserror::Error;

use crate::linsys::SpecialityReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("basis is not unimodular (determinant {det})")]
    NotUnimodular { det: i64 },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("cone index {index} out of range ({len} maximal cones)")]
    ConeIndex { index: usize, len: usize },

    #[error("wall relation inconsistent at facet {facet:?}: coefficient of completing ray is {coefficient}, expected 1")]
    WallRelation { facet: Vec<usize>, coefficient: i64 },

    #[error("divisor has {got} coefficients but the fan has {expected} rays")]
    DivisorLength { expected: usize, got: usize },

    #[error("non-integral polytope vertex for cone {cone}")]
    NonIntegralVertex { cone: usize },

    #[error("divisor not ample")]
    NotAmple,

    #[error("degenerate edge between cones {cone_a} and {cone_b}: divisor is not ample")]
    DegenerateEdge { cone_a: usize, cone_b: usize },

    #[error(
        "lattice point {point:?} lies outside the polytope (negative coordinate at cone {cone})"
    )]
    OutsidePolytope { point: Vec<i64>, cone: usize },

    #[error("negative multiplicity {mult} at cone {cone}")]
    NegativeMultiplicity { cone: usize, mult: i64 },

    #[error("h1 came out negative ({0}); lattice oracle inconsistent")]
    NegativeH1(i64),

    #[error("theorem violation: h1 = {} but {} invariant-curve witnesses", report.h1, report.witnesses.len())]
    TheoremViolation { report: Box<SpecialityReport> },

    #[error("picard classes live on different surface models")]
    ModelMismatch,

    #[error("odd numerator {0} in an integer-valued surface formula")]
    Parity(i64),

    #[error("candidate coefficient bound {0} exceeds 10")]
    BoundTooLarge(i64),

    #[error("empty candidate list")]
    NoCandidates,

    #[error("reduction exceeded {0} steps")]
    NonTermination(usize),

    #[error("fan is not a standard P2 or Hirzebruch fan")]
    NotStandardSurface,

    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
