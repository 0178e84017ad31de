use thiserror::Error;

/// Errors raised by every model in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex sets differ: {left:?} vs {right:?}")]
    VertexMismatch { left: Vec<String>, right: Vec<String> },

    #[error("vertex `{0}` occurs in both operands of a composition")]
    VertexClash(String),

    #[error("max weight mismatch: {0} vs {1}")]
    WeightMismatch(u32, u32),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded: {what} (limit {limit})")]
    BudgetExceeded { what: String, limit: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
