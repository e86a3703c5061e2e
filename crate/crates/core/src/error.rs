use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("coordinate {coord} out of range for length {m}")]
    CoordRange { coord: usize, m: usize },
    #[error("full-space enumeration out of range: m = {0} exceeds {limit}", limit = crate::partition::MAX_SPACE_LOG2)]
    SpaceTooLarge(usize),
    #[error("undefined: {0}")]
    Undefined(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not a valid distance distribution: {0}")]
    BadDistribution(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
