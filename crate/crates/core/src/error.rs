use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("degree {requested} exceeds the computed range {available}")]
    Truncation { requested: usize, available: usize },
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(position: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { position: position.into(), message: message.into() }
    }
}
