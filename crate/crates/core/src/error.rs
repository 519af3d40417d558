use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range for {symbol} at dimension {dim}")]
    IndexOutOfRange {
        symbol: &'static str,
        index: usize,
        dim: usize,
    },

    #[error("face table has no entry for generator {0}")]
    MissingFaceEntry(String),

    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("complex `{0}` is not reduced (it must have exactly one vertex)")]
    NotReduced(String),

    #[error("not an action by automorphisms: {0}")]
    NotAnAction(String),

    #[error("function is not a crossed homomorphism: {0}")]
    NotCrossed(String),

    #[error("size bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("no automorphism of the quotient is compatible with the action: {0}")]
    NoDescent(String),

    #[error("relator of 2-simplex `{0}` does not map to the identity")]
    RelatorViolation(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("glue condition fails: {0}")]
    GlueFailure(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("hypothesis not satisfied: {0}")]
    HypothesisFailed(String),

    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },

    #[error("schema error in {path}: {message}")]
    Schema { path: String, message: String },

    #[error("invariant violated ({invariant}): {detail}")]
    InvariantViolation { invariant: String, detail: String },

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn invariant(invariant: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::InvariantViolation {
            invariant: invariant.into(),
            detail: detail.into(),
        }
    }
}
