use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: operands live in different polynomial rings")]
    RingMismatch,

    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),

    #[error("characteristic {0} is not supported by this build")]
    UnsupportedCharacteristic(u64),

    #[error("input is not graded: {0}")]
    NotGraded(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),

    #[error("internal cross-check disagreement: {0}")]
    CrossCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable name of the variant, used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RingMismatch => "ring_mismatch",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::ResourceLimit(_) => "resource_limit",
            Error::Syntax { .. } => "syntax",
            Error::UnknownVariable(_) => "unknown_variable",
            Error::NonPrimeCharacteristic(_) => "non_prime_characteristic",
            Error::UnsupportedCharacteristic(_) => "unsupported_characteristic",
            Error::NotGraded(_) => "not_graded",
            Error::DegreeMismatch(_) => "degree_mismatch",
            Error::InvalidInput(_) => "invalid_input",
            Error::Unsupported(_) => "unsupported",
            Error::Hypothesis(_) => "hypothesis",
            Error::CrossCheck(_) => "cross_check",
        }
    }

    /// Process exit code: 1 hypothesis failed, 2 bad input, 3 resource
    /// limit, 4 internal disagreement.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Hypothesis(_) => 1,
            Error::Syntax { .. }
            | Error::UnknownVariable(_)
            | Error::NonPrimeCharacteristic(_)
            | Error::UnsupportedCharacteristic(_)
            | Error::NotGraded(_)
            | Error::DegreeMismatch(_)
            | Error::InvalidInput(_)
            | Error::Unsupported(_) => 2,
            Error::ResourceLimit(_) => 3,
            Error::RingMismatch | Error::ZeroPolynomial | Error::CrossCheck(_) => 4,
        }
    }
}
