use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: u64, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("input too large for the reference oracle: {0}")]
    OracleGuard(String),

    #[error("covers are over different node universes ({0} vs {1} nodes)")]
    UniverseMismatch(usize, usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}
