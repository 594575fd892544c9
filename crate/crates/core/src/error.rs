use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("signature entries must be +1 or -1, got {0:?}")]
    InvalidSignature([i8; 3]),
    #[error("p + q must equal 3, got p = {p}, q = {q}")]
    InvalidPq { p: u32, q: u32 },
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },
    #[error("grade {0} is outside 0..=3")]
    InvalidGrade(u8),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("elements belong to different algebras: {left} vs {right}")]
    TableMismatch { left: String, right: String },
    #[error("invalid algebra table: {0}")]
    InvalidTable(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
