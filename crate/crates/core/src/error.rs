use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("rating {value} at alternative {alternative}, reviewer {reviewer} is outside [0, 4]")]
    RatingOutOfRange {
        alternative: usize,
        reviewer: usize,
        value: f64,
    },
    #[error("value {0} is outside the rating scale [0, 4]")]
    ValueOutOfRange(f64),
    #[error("invalid structure: {0}")]
    Structure(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{what} {value} is outside the supported range {min}..={max}")]
    OutOfTable {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("triangular fuzzy number domain error: {0}")]
    Domain(String),
    #[error("power iteration did not converge after {iterations} iterations")]
    NotConverged { iterations: usize, last: Vec<f64> },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("degenerate input: {0}")]
    Degenerate(String),
}
