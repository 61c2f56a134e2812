use thiserror::Error;

use crate::carrier::SubsetVal;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("validation failed ({axiom}): {witness}")]
    Validation { axiom: String, witness: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("closure cap {cap} exceeded after {} elements", partial.len())]
    CapExceeded { cap: usize, partial: Vec<SubsetVal> },
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
