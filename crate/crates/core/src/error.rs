use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// `Consistency` is reserved for the cross-checks that must never fail on a
/// correct build: two computation routes disagreeing, an oracle contradicting
/// the engine, a proven equivalence breaking.
#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {0} is not a prime below 2^31")]
    NonPrimeCharacteristic(u64),

    #[error("mismatched variable counts: {0} vs {1}")]
    VariableMismatch(usize, usize),

    #[error("order undefined for zero")]
    ZeroOrder,

    #[error("zero in quotient")]
    ZeroInQuotient,

    #[error("ideal contains a unit")]
    UnitIdeal,

    #[error("N ⊆ mF required: generator {0} has an entry outside the maximal ideal")]
    NotInMaximalIdeal(usize),

    #[error("input is not a complex: {0}")]
    NotAComplex(String),

    #[error("non-homogeneous input: {0}")]
    NonHomogeneous(String),

    #[error("zero matrix has no order")]
    ZeroMatrix,

    #[error("submodule is zero")]
    ZeroSubmodule,

    #[error("truncation window violated: {0}")]
    OracleWindow(String),

    #[error("truncated model too large: {size} basis vectors exceeds bound {bound}")]
    ModelTooLarge { size: usize, bound: usize },

    #[error("degree type {0:?} must start at 0 and be strictly increasing")]
    InvalidDegreeType(Vec<i64>),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("inconclusive at cutoff {cutoff}: {message}")]
    Inconclusive { cutoff: usize, message: String },

    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}, `{command}`: {source}")]
    Command {
        line: usize,
        command: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
