use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not a supported prime")]
    NotPrime(u64),
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("denominator divisible by the characteristic {0}")]
    DenominatorDivisibleByPrime(u64),
    #[error("coefficients belong to different fields")]
    FieldMismatch,
    #[error("polynomials belong to different rings")]
    ContextMismatch,
    #[error("the variable list is empty")]
    EmptyContext,
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("constant polynomial has no main variable")]
    NoMainVariable,
    #[error("divisor must be nonconstant in the division variable")]
    ConstantDivisor,
    #[error("evaluation point is missing a value for `{0}`")]
    MissingValue(String),
    #[error("expected main variable `{expected}` for both operands")]
    MainVariableMismatch { expected: String },
    #[error("matrix has more rows ({rows}) than columns ({cols})")]
    TooManyRows { rows: usize, cols: usize },
    #[error("not a triangular set: {0}")]
    NotTriangular(String),
    #[error("not a regular chain: initial of the polynomial in `{0}` is not regular")]
    NotRegular(String),
    #[error("characteristic {characteristic} is too small for main degree {degree}")]
    CharacteristicTooSmall { characteristic: u64, degree: u32 },
    #[error("enumeration of {points} points exceeds the cap of {cap}")]
    EnumerationTooLarge { points: u128, cap: u64 },
    #[error("invalid solver options: {0}")]
    InvalidOptions(String),
    #[error("time limit exceeded")]
    Timeout,
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
