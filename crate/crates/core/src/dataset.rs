//! Review data: the alternatives × reviewers rating matrix, per-alternative
//! means, rating categories and column max-normalization.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::diag::Warning;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

pub const RATING_MIN: f64 = 0.0;
pub const RATING_MAX: f64 = 4.0;

/// Ratings with one row per alternative and one column per reviewer.
#[derive(Debug, Clone, PartialEq)]
pub struct ReviewMatrix {
    alternatives: Vec<String>,
    values: Matrix,
}

impl ReviewMatrix {
    /// Validates and wraps `values` (`alternatives.len()` rows).
    ///
    /// Requires at least two alternatives and one reviewer, unique non-empty
    /// names, and every rating inside `[0, 4]`.
    pub fn new(alternatives: Vec<String>, values: Matrix) -> Result<Self> {
        if alternatives.len() != values.rows() {
            return Err(Error::Structure(format!(
                "{} names for {} alternatives",
                alternatives.len(),
                values.rows()
            )));
        }
        if alternatives.len() < 2 {
            return Err(Error::Structure(format!(
                "need at least 2 alternatives, got {}",
                alternatives.len()
            )));
        }
        if values.cols() == 0 {
            return Err(Error::Structure("no reviewer ratings".into()));
        }
        let mut seen = BTreeSet::new();
        for name in &alternatives {
            if name.trim().is_empty() {
                return Err(Error::Structure("empty alternative name".into()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::Structure(format!(
                    "duplicate alternative name '{name}'"
                )));
            }
        }
        for i in 0..values.rows() {
            for (j, &v) in values.row(i).iter().enumerate() {
                if !(RATING_MIN..=RATING_MAX).contains(&v) {
                    return Err(Error::RatingOutOfRange {
                        alternative: i,
                        reviewer: j,
                        value: v,
                    });
                }
            }
        }
        Ok(Self {
            alternatives,
            values,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn values(&self) -> &Matrix {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.alternatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alternatives.is_empty()
    }

    pub fn reviewers(&self) -> usize {
        self.values.cols()
    }
}

/// One non-negative score per alternative, in input order.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    names: Vec<String>,
    scores: Vec<f64>,
}

impl ScoreVector {
    pub fn new(names: Vec<String>, scores: Vec<f64>) -> Result<Self> {
        if names.len() != scores.len() {
            return Err(Error::LengthMismatch {
                left: names.len(),
                right: scores.len(),
            });
        }
        if let Some(bad) = scores.iter().find(|s| !s.is_finite() || **s < 0.0) {
            return Err(Error::Input(format!(
                "scores must be finite and non-negative, got {bad}"
            )));
        }
        Ok(Self { names, scores })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    /// Max-normalizes the scores as a single decision-matrix column.
    pub fn normalized(&self) -> (ScoreVector, Vec<Warning>) {
        let column = Matrix::from_fn(self.len(), 1, |i, _| self.scores[i]);
        // entries are already validated non-negative and finite
        let (out, warnings) = normalize(&column).expect("validated scores");
        let scores = out.column(0).collect();
        (
            ScoreVector {
                names: self.names.clone(),
                scores,
            },
            warnings,
        )
    }
}

/// Arithmetic mean of each alternative's ratings.
pub fn category_means(m: &ReviewMatrix) -> ScoreVector {
    let reviewers = m.reviewers() as f64;
    let scores = (0..m.len())
        .map(|i| m.values.row(i).iter().sum::<f64>() / reviewers)
        .collect();
    ScoreVector {
        names: m.alternatives.clone(),
        scores,
    }
}

/// Divides every column by its maximum so entries land in `[0, 1]`.
///
/// A column whose maximum is 0 stays all-zero and produces one
/// [`Warning::ZeroColumn`].
pub fn normalize(m: &Matrix) -> Result<(Matrix, Vec<Warning>)> {
    if let Some(bad) = m.iter().find(|v| !v.is_finite() || *v < 0.0) {
        return Err(Error::Input(format!(
            "normalization needs finite non-negative entries, got {bad}"
        )));
    }
    let maxima: Vec<f64> = (0..m.cols())
        .map(|j| m.column(j).fold(0.0, f64::max))
        .collect();
    let warnings = maxima
        .iter()
        .enumerate()
        .filter(|(_, &mx)| mx == 0.0)
        .map(|(column, _)| Warning::ZeroColumn { column })
        .collect();
    let out = Matrix::from_fn(m.rows(), m.cols(), |i, j| {
        let mx = maxima[j];
        if mx == 0.0 {
            0.0
        } else {
            m[(i, j)] / mx
        }
    });
    Ok((out, warnings))
}

/// Rating bands: `{0}`, `(0, 1]`, `(1, 2]`, `(2, 3]`, `(3, 4]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RatingCategory {
    Terrible,
    Poor,
    Average,
    VeryGood,
    Excellent,
}

impl RatingCategory {
    pub const ALL: [RatingCategory; 5] = [
        RatingCategory::Terrible,
        RatingCategory::Poor,
        RatingCategory::Average,
        RatingCategory::VeryGood,
        RatingCategory::Excellent,
    ];

    /// Inclusive upper bound of the band; the lower bound is exclusive
    /// except for `Terrible`, which is exactly 0.
    pub fn upper_bound(self) -> f64 {
        match self {
            RatingCategory::Terrible => 0.0,
            RatingCategory::Poor => 1.0,
            RatingCategory::Average => 2.0,
            RatingCategory::VeryGood => 3.0,
            RatingCategory::Excellent => 4.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RatingCategory::Terrible => "Terrible",
            RatingCategory::Poor => "Poor",
            RatingCategory::Average => "Average",
            RatingCategory::VeryGood => "Very Good",
            RatingCategory::Excellent => "Excellent",
        }
    }
}

impl fmt::Display for RatingCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn classify_rating(v: f64) -> Result<RatingCategory> {
    if !(RATING_MIN..=RATING_MAX).contains(&v) {
        return Err(Error::ValueOutOfRange(v));
    }
    Ok(RatingCategory::ALL
        .into_iter()
        .find(|c| v <= c.upper_bound())
        .unwrap_or(RatingCategory::Excellent))
}
