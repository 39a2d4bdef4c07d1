//! Ranking, the sum-normalized baseline, MSE comparison and the
//! three-method pipeline.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::ahp::{self, ConsistencyReport, WeightVector};
use crate::dataset::{self, ReviewMatrix, ScoreVector};
use crate::diag::Warning;
use crate::error::{Error, Result};
use crate::fuzzy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Ahp,
    FuzzyAhp,
    Manual,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Ahp, Method::FuzzyAhp, Method::Manual];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Ahp => "ahp",
            Method::FuzzyAhp => "fuzzy_ahp",
            Method::Manual => "manual",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How final per-alternative scores are formed from method weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScoreMode {
    /// Rank by the method weights directly.
    #[default]
    Weight,
    /// Rank by weight × mean score, renormalized to sum one.
    WeightTimesMean,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoringOptions {
    /// Max-normalize the per-alternative means before scoring.
    pub normalize: bool,
    pub score_mode: ScoreMode,
    pub cr_threshold: f64,
}

impl Default for ScoringOptions {
    fn default() -> Self {
        Self {
            normalize: true,
            score_mode: ScoreMode::Weight,
            cr_threshold: ahp::CR_THRESHOLD,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankEntry {
    pub rank: usize,
    /// Position of the alternative in the input.
    pub index: usize,
    pub name: String,
    pub weight: f64,
    /// Mean rating fed to the methods (max-normalized when enabled).
    pub raw_score: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankingReport {
    pub method: Method,
    /// Sorted by rank.
    pub entries: Vec<RankEntry>,
    pub consistency: Option<ConsistencyReport>,
    pub mse_vs_manual: Option<f64>,
}

impl RankingReport {
    /// False when a consistency report is attached and failed the gate.
    pub fn passes_gate(&self) -> bool {
        self.consistency.as_ref().is_none_or(|c| c.consistent)
    }

    /// Weights in input order.
    pub fn weights_by_index(&self) -> Vec<f64> {
        let mut w = alloc::vec![0.0; self.entries.len()];
        for e in &self.entries {
            w[e.index] = e.weight;
        }
        w
    }
}

/// Sum-normalized scores, `w_i = s_i / Σ s`.
pub fn manual_baseline(s: &ScoreVector) -> Result<WeightVector> {
    if s.scores().iter().all(|&x| x == 0.0) {
        return Err(Error::Degenerate("all scores are zero".into()));
    }
    WeightVector::normalized(s.names().to_vec(), s.scores())
}

/// Input indices ordered by descending weight; ties keep input order.
pub fn rank_order(w: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..w.len()).collect();
    // stable sort keeps earlier indices first among equal weights
    order.sort_by(|&a, &b| w[b].total_cmp(&w[a]));
    order
}

/// Ranked entries with ranks `1..=n`.
pub fn rank(w: &WeightVector, raw_scores: &[f64]) -> Result<Vec<RankEntry>> {
    if raw_scores.len() != w.len() {
        return Err(Error::LengthMismatch {
            left: w.len(),
            right: raw_scores.len(),
        });
    }
    Ok(rank_order(w.weights())
        .into_iter()
        .enumerate()
        .map(|(pos, index)| RankEntry {
            rank: pos + 1,
            index,
            name: w.names()[index].clone(),
            weight: w.weights()[index],
            raw_score: raw_scores[index],
        })
        .collect())
}

/// Mean squared error `(1/n) Σ (f_i - y_i)^2`.
pub fn mse(f: &[f64], y: &[f64]) -> Result<f64> {
    if f.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: f.len(),
            right: y.len(),
        });
    }
    if f.is_empty() {
        return Err(Error::Input("mse of empty vectors".into()));
    }
    if f.iter().chain(y).any(|v| !v.is_finite()) {
        return Err(Error::Input("mse operands must be finite".into()));
    }
    Ok(f.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>() / f.len() as f64)
}

/// Reports for all three methods plus the warnings raised on the way.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    /// In [`Method::ALL`] order.
    pub reports: Vec<RankingReport>,
    pub warnings: Vec<Warning>,
}

impl Comparison {
    pub fn report(&self, method: Method) -> &RankingReport {
        self.reports
            .iter()
            .find(|r| r.method == method)
            .expect("every method is present")
    }
}

fn apply_score_mode(w: WeightVector, means: &[f64], mode: ScoreMode) -> Result<WeightVector> {
    match mode {
        ScoreMode::Weight => Ok(w),
        ScoreMode::WeightTimesMean => {
            let product: Vec<f64> = w.weights().iter().zip(means).map(|(a, b)| a * b).collect();
            WeightVector::normalized(w.names().to_vec(), &product)
        }
    }
}

/// Runs the manual, AHP and fuzzy-AHP branches on the same means.
///
/// Both AHP branches share the crisp comparison matrix and carry its
/// consistency report; a failed gate is kept in the output, never dropped.
pub fn compare_methods(data: &ReviewMatrix, options: &ScoringOptions) -> Result<Comparison> {
    if !(options.cr_threshold > 0.0) {
        return Err(Error::Input(format!(
            "consistency threshold must be positive, got {}",
            options.cr_threshold
        )));
    }
    let mut warnings = Vec::new();
    let mut scores = dataset::category_means(data);
    if options.normalize {
        let (normalized, w) = scores.normalized();
        warnings.extend(w);
        scores = normalized;
    }
    let raw = scores.scores().to_vec();

    let manual = manual_baseline(&scores)?;
    let (pairwise, w) = ahp::build_pairwise(&scores)?;
    warnings.extend(w);
    let (ahp_w, consistency) = ahp::ahp_weights(&pairwise, options.cr_threshold)?;
    let (fuzzy_w, w) = fuzzy::fuzzy_ahp_weights(&pairwise)?;
    warnings.extend(w);

    let manual = apply_score_mode(manual, &raw, options.score_mode)?;
    let ahp_w = apply_score_mode(ahp_w, &raw, options.score_mode)?;
    let fuzzy_w = apply_score_mode(fuzzy_w, &raw, options.score_mode)?;

    let baseline = manual.weights().to_vec();
    let mut reports = Vec::with_capacity(3);
    for (method, w, consistency) in [
        (Method::Ahp, &ahp_w, Some(consistency.clone())),
        (Method::FuzzyAhp, &fuzzy_w, Some(consistency)),
        (Method::Manual, &manual, None),
    ] {
        let mse_vs_manual = match method {
            Method::Manual => None,
            _ => Some(mse(w.weights(), &baseline)?),
        };
        reports.push(RankingReport {
            method,
            entries: rank(w, &raw)?,
            consistency,
            mse_vs_manual,
        });
    }
    Ok(Comparison { reports, warnings })
}
