use thiserror::Error;

use crate::combinatorics::Series;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("partition has length {length}, exceeding rank {rank}")]
    LengthExceedsRank { length: usize, rank: usize },

    #[error("operation is not defined for series {0}")]
    UnsupportedSeries(Series),

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("weight {weight} is not dominant for series {series}")]
    NotDominant { series: Series, weight: String },

    #[error("not weakly decreasing: {0}")]
    NotDecreasing(String),

    #[error("exact division failed: {0}")]
    NotDivisible(String),

    #[error("cannot substitute zero into a negative power of {0}")]
    ZeroToNegativePower(String),

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("polynomial is not invariant under z_i -> 1/z_i")]
    NotInversionInvariant,

    #[error("polynomial has negative exponents")]
    NegativeExponent,

    #[error("polynomials live in different variable sets: [{0}] vs [{1}]")]
    VariableMismatch(String, String),

    #[error("unknown variable {0}")]
    UnknownVariable(String),

    #[error("evaluation points are not pairwise distinct")]
    RepeatedPoints,

    #[error("decomposition produced an invalid multiplicity {multiplicity} for {weight}")]
    BadMultiplicity {
        weight: String,
        multiplicity: String,
    },

    #[error("invalid index pair ({0}, {1})")]
    InvalidIndex(i64, i64),

    #[error("cost guard: {terms} terms exceed the limit {limit}")]
    CostGuard { terms: u128, limit: u128 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
