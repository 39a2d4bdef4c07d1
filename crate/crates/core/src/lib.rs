//! Ranking alternatives from reviewer ratings with classical AHP and
//! fuzzy AHP (triangular fuzzy numbers with extent analysis).
//!
//! The crate is `no_std` and only needs `alloc`. File loading, report
//! formatting and the command line live in the `mcdm` crate.
//!
//! Pipeline overview:
//!
//! 1. [`dataset`]: a [`ReviewMatrix`] (alternatives × reviewers, ratings in
//!    `[0, 4]`) is reduced to per-alternative means and optionally
//!    max-normalized.
//! 2. [`ahp`]: means become a reciprocal [`PairwiseMatrix`] of score ratios;
//!    power iteration yields priority weights and `lambda_max`, gated by the
//!    consistency ratio.
//! 3. [`fuzzy`]: the crisp matrix is mapped onto the triangular fuzzy scale,
//!    synthetic extents are built and compared by degree of possibility.
//! 4. [`ranking`]: weights are ranked and compared against a sum-normalized
//!    baseline by mean squared error.
#![no_std]
#![forbid(unsafe_code)]
// `!(x > 0.0)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod ahp;
pub mod dataset;
mod diag;
mod error;
pub mod fuzzy;
mod matrix;
pub mod ranking;

pub use ahp::{ConsistencyReport, PairwiseMatrix, WeightVector};
pub use dataset::{RatingCategory, ReviewMatrix, ScoreVector};
pub use diag::Warning;
pub use error::{Error, Result};
pub use fuzzy::{ExtentVector, FuzzyPairwiseMatrix, Tfn};
pub use matrix::Matrix;
pub use ranking::{Method, RankEntry, RankingReport, ScoreMode, ScoringOptions};

/// Travel Reviews category labels, in column order of the public dataset.
pub const TRAVEL_CATEGORY_NAMES: [&str; 10] = [
    "Art Galleries",
    "Dance Clubs",
    "Juice Bars",
    "Restaurants",
    "Museums",
    "Resorts",
    "Parks/Picnic Spots",
    "Beaches",
    "Theaters",
    "Religious Institutions",
];
