use thiserror::Error;

/// Errors raised by the library. Parse errors carry a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid value: {0}")]
    InvalidValue(String),
    #[error("unknown cuspidal label `{0}`")]
    UnknownLabel(String),
    #[error("negative value {0} in a multiset that must be non-negative")]
    Negative(String),
    #[error("bad-parity block {0} has no partner; the parameter does not factor through the target group")]
    Pairing(String),
    #[error("sign choice inconsistent with a - b for block {0}")]
    ZetaInconsistent(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("index {index} out of range (at most {len})")]
    OutOfRange { index: usize, len: usize },
    /// A problem with an input file, prefixed by its path.
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error("diagonal restrictions differ: {0}")]
    DiagonalMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
