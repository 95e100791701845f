use thiserror::Error;

/// Errors produced by the hypergraph toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("structural integrity violated: {0}")]
    Structure(String),
    #[error("invalid solution: {0}")]
    InvalidSolution(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
