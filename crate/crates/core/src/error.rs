//! Error type shared across the toolkit.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Structurally malformed input record.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Record is valid JSON but violates the document schema.
    #[error("schema error at line {line}: missing or invalid field `{field}`")]
    Schema { line: usize, field: String },

    #[error("duplicate document id `{0}`")]
    DuplicateId(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("unknown language `{0}`")]
    UnknownLanguage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit status the CLI maps this error to: usage/config problems are
    /// 2, data problems are 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::UnknownLanguage(_) => 2,
            _ => 1,
        }
    }
}
