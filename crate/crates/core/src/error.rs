use num_bigint::BigInt;

use crate::exact::QmodZ;
use crate::local_data::Violation;

/// Crate-wide error type. Every failed precondition maps to one variant;
/// functions whose preconditions are enforced by their argument types are
/// infallible instead.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid modulus {0}")]
    InvalidModulus(BigInt),

    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: BigInt, m: BigInt },

    #[error("empty input")]
    EmptyInput,

    #[error("zero entry at index {0}")]
    ZeroEntry(usize),

    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: BigInt, b: BigInt },

    #[error("{what} must be positive, got {value}")]
    NotPositive { what: &'static str, value: i64 },

    #[error("orbit isotropy order must be at least 2, got {0}")]
    InvalidOrder(BigInt),

    #[error("weight {q} is not a unit modulo {p}")]
    WeightNotUnit { q: BigInt, p: BigInt },

    #[error("expected weight vector of length {expected}, got {got}")]
    WeightLength { expected: usize, got: usize },

    #[error("weight vectors must have matching lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("lead weight must be nonzero")]
    ZeroLeadWeight,

    #[error("invalid local data: {}", format_violations(.0))]
    InvalidLocalData(Vec<Violation>),

    #[error("weights are not effective: common divisor {0} exceeds 1")]
    NotEffective(BigInt),

    #[error("characteristic index {k} out of range 1..={max}")]
    BadIndex { k: usize, max: usize },

    #[error("weight must be nonzero at position {0}")]
    ZeroWeight(usize),

    #[error("{0} is not prime")]
    NotPrime(i64),

    #[error("suspension order {p} must exceed every |weight|, found {q}")]
    PrimeTooSmall { p: i64, q: i64 },

    #[error("parameters must be pairwise distinct, {0} repeats")]
    DuplicateParameter(i64),

    #[error("orders {a} and {b} are not pairwise coprime")]
    NotPairwiseCoprime { a: BigInt, b: BigInt },

    #[error("dimension must be a positive even integer, got {0}")]
    BadDimension(usize),

    #[error("invalid stratum {index}: {reason}")]
    InvalidStratum { index: usize, reason: String },

    #[error("check requires e = 0, but e = {0}")]
    NotApplicable(QmodZ),
}

pub type Result<T> = std::result::Result<T, Error>;

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
