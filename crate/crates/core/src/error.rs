use thiserror::Error;

/// Malformed textual input (matrices, words, terms, types, derivations).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {msg}")]
pub struct ParseError {
    pub msg: String,
}

impl ParseError {
    pub fn new(msg: impl Into<String>) -> Self {
        ParseError { msg: msg.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index error: {0}")]
    Index(String),
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("type error at `{at}`: {msg}")]
    Type { at: String, msg: String },
    #[error("step {step}: {msg}")]
    Step { step: usize, msg: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
