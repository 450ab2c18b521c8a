use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed textual input, with a 1-based position.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// Structurally invalid graph (self-loop, duplicate edge, bad index).
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    /// Operation requires a connected graph.
    #[error("graph is disconnected")]
    Disconnected,
    /// A stated precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An exhaustive search exceeded its state budget.
    #[error("search budget exceeded after {0} states")]
    BudgetExceeded(u64),
    /// A constructed colouring failed its own soundness check. This is a bug,
    /// never an expected runtime condition.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
