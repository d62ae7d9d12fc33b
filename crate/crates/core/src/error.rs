use thiserror::Error;

/// Errors raised by graph construction, parsing and the guarded searches.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{what} refused: graph has {n} vertices, limit is {limit}")]
    SizeGuard { what: &'static str, n: usize, limit: usize },

    #[error("invalid instance parameters: {0}")]
    InvalidParameters(String),

    #[error("witness schema mismatch: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
