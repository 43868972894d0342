use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("axis index {0} is not one of 1, 2, 3")]
    InvalidAxis(usize),
    #[error("index out of range: {what} = {value} not in 0..={max}")]
    IndexOutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("invalid quadrature nodes: {0}")]
    InvalidNodes(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
