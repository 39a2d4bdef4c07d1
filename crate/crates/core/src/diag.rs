use alloc::string::String;
use core::fmt;

/// Non-fatal conditions the pipeline recovered from.
///
/// Library functions return these next to their result; front ends decide
/// where to print them.
#[derive(Debug, Clone, PartialEq)]
pub enum Warning {
    /// A normalization column had maximum 0 and was left as zeros.
    ZeroColumn { column: usize },
    /// A score of zero was raised to the positive floor before taking ratios.
    ScoreFloored { name: String, floor: f64 },
    /// A score ratio left the `[1/9, 9]` comparison scale and was clamped.
    RatioClamped {
        row: String,
        col: String,
        ratio: f64,
    },
    /// Every possibility degree was zero; uniform weights were used.
    UniformFallback,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::ZeroColumn { column } => {
                write!(f, "column {column} has maximum 0; normalized to zeros")
            }
            Warning::ScoreFloored { name, floor } => {
                write!(f, "score of '{name}' is 0; floored to {floor:e}")
            }
            Warning::RatioClamped { row, col, ratio } => write!(
                f,
                "ratio '{row}'/'{col}' = {ratio:.4} outside [1/9, 9]; clamped"
            ),
            Warning::UniformFallback => {
                write!(f, "all possibility degrees are 0; using uniform weights")
            }
        }
    }
}
