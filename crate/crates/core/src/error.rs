use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid degree {0}: need n >= 3")]
    InvalidDegree(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("image table is not a bijection")]
    NotBijective,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("transposition needs two distinct points, got ({0} {0})")]
    DegenerateTransposition(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid connection set: {0}")]
    InvalidGenSet(String),
    #[error("closure exceeded cap of {cap} elements")]
    ClosureOverflow { cap: usize },
    #[error("rank {rank} out of range for degree {degree}")]
    RankOutOfRange { rank: u64, degree: usize },
    #[error("explicit graph for n = {n} needs {required} bytes, budget is {budget}")]
    BudgetExceeded { n: usize, required: u128, budget: u128 },
    #[error("explicit graphs are limited to n <= {limit}, requested n = {n}")]
    DegreeCeiling { n: usize, limit: usize },
    #[error("operation needs an explicit graph")]
    ImplicitGraph,
    #[error("graph is not connected")]
    Disconnected,
    #[error("input too large for this operation: {0}")]
    TooLarge(String),
    #[error("unsupported connection set: {0}")]
    Unsupported(String),
    #[error("invalid exponent sequence: {0}")]
    InvalidSequence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
