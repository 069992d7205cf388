use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative part {0} in partition")]
    NonPositivePart(i64),
    #[error("{which} partition not strict")]
    NotStrict { which: &'static str },
    #[error("inner not contained in outer")]
    NotContained,
    #[error("length condition violated: l(outer) = {outer}, l(inner) = {inner}; need l(outer) - l(inner) in {{0, 1}}")]
    LengthCondition { outer: usize, inner: usize },
    #[error("coincident coordinates at positions {0} and {1}")]
    CoincidentCoordinates(usize, usize),
    #[error("denominator of the shifted Schur ratio vanishes")]
    SingularDenominator,
    #[error("polynomial division left a nonzero remainder")]
    NonDivisible,
    #[error("unsupported index: {0}")]
    UnsupportedIndex(String),
    #[error("non-integer result {0}")]
    NonIntegerResult(String),
    #[error("partition {0} has an even part")]
    EvenPart(String),
    #[error("size mismatch: expected weight {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("outer weight {outer} smaller than inner weight {inner}")]
    WeightOrder { outer: usize, inner: usize },
    #[error("invalid Thoma point: {0}")]
    InvalidThomaPoint(String),
    #[error("remainder {0} cannot be absorbed while keeping parts distinct")]
    InfeasibleRemainder(usize),
    #[error("too many variables: {n} (limit {limit})")]
    TooManyVariables { n: usize, limit: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
