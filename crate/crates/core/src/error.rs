use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("bracket undefined: {0}")]
    BracketUndefined(String),
    #[error("no boundary preimage: {0}")]
    PreimageNotFound(String),
    #[error("class has odd degree {0}")]
    OddDegree(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("law {law_id} fails: {witness}")]
    Validation { law_id: String, witness: String },
    #[error("generation budget exhausted after {0} attempts")]
    BudgetExhausted(usize),
    #[error("i/o error: {0}")]
    Io(String),
}
