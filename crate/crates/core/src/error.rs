use thiserror::Error;

/// Errors raised by the algebra, enumeration and verification layers.
///
/// Several variants (`InexactDivision`, `NonIntegerResult`,
/// `SingularTransition`, `BookkeepingMismatch`) can only fire on a bug: the
/// mathematics guarantees they never occur on valid inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("index {index} out of range 1..{limit}")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("Laurent division is not exact")]
    InexactDivision,
    #[error("modified binomial [{a}; {b}] is not an integer")]
    NonIntegerResult { a: i64, b: i64 },
    #[error("block must be nonempty")]
    EmptyBlock,
    #[error("EC_{n} has non-integral coefficient {coeff} in term {term}")]
    IntegralityViolation { n: usize, term: String, coeff: String },
    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("transition matrix in degree {degree} is singular")]
    SingularTransition { degree: usize },
    #[error("partition sizes differ: {left} vs {right}")]
    SizeMismatch { left: u32, right: u32 },
    #[error("closed forms need b = c >= 2, got b = {b}, c = {c}")]
    UnsupportedParams { b: i64, c: i64 },
    #[error("Laurent exponent ({p1}, {p2}) does not invert to a dimension vector")]
    BookkeepingMismatch { p1: i64, p2: i64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("truncation window is empty")]
    TruncationTooSmall,
    #[error("assertion failed: {0}")]
    AssertionFailure(String),
    #[error("integer overflow computing {0}")]
    Overflow(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
