use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("q must not be 0, 1 or -1 (got {0})")]
    InvalidQ(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("singular matrix{0}")]
    Singular(String),
    #[error("inconsistent computation: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
