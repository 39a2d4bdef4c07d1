//! Crisp AHP: reciprocal pairwise matrices from score ratios, principal
//! eigenvector weights by power iteration, and the Saaty consistency gate.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::dataset::ScoreVector;
use crate::diag::Warning;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Upper end of the comparison scale; ratios are clamped to `[1/9, 9]`.
pub const SCALE_MAX: f64 = 9.0;
/// Zero scores are raised to this before ratios are taken.
pub const SCORE_FLOOR: f64 = 1e-6;
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 1000;
/// Largest acceptable consistency ratio.
pub const CR_THRESHOLD: f64 = 0.1;

const RECIPROCITY_TOL: f64 = 1e-9;

/// Saaty random consistency index for orders 1 through 15.
const RANDOM_INDEX: [f64; 15] = [
    0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49, 1.51, 1.48, 1.56, 1.57, 1.59,
];

/// Positive reciprocal comparison matrix: `a[i][j]` is how strongly
/// alternative `i` dominates `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseMatrix {
    names: Vec<String>,
    a: Matrix,
}

impl PairwiseMatrix {
    /// Validates a square, positive matrix with unit diagonal and
    /// `a[j][i] = 1 / a[i][j]` (within 1e-9).
    pub fn new(names: Vec<String>, a: Matrix) -> Result<Self> {
        let n = names.len();
        if a.rows() != n || a.cols() != n {
            return Err(Error::Structure(format!(
                "pairwise matrix is {}x{} for {n} names",
                a.rows(),
                a.cols()
            )));
        }
        for i in 0..n {
            if a[(i, i)] != 1.0 {
                return Err(Error::Input(format!("diagonal entry {i} is {}", a[(i, i)])));
            }
            for j in 0..n {
                let v = a[(i, j)];
                if !(v.is_finite() && v > 0.0) {
                    return Err(Error::Input(format!(
                        "entry ({i}, {j}) = {v} is not positive"
                    )));
                }
                if (v * a[(j, i)] - 1.0).abs() > RECIPROCITY_TOL {
                    return Err(Error::Input(format!(
                        "entries ({i}, {j}) and ({j}, {i}) are not reciprocal"
                    )));
                }
            }
        }
        Ok(Self { names, a })
    }

    /// Consistent matrix `a[i][j] = w_i / w_j` without clamping.
    pub fn from_weights(names: Vec<String>, w: &[f64]) -> Result<Self> {
        if names.len() != w.len() {
            return Err(Error::LengthMismatch {
                left: names.len(),
                right: w.len(),
            });
        }
        if w.iter().any(|x| !(x.is_finite() && *x > 0.0)) {
            return Err(Error::Input("weights must be positive and finite".into()));
        }
        let n = w.len();
        let a = Matrix::from_fn(n, n, |i, j| if i == j { 1.0 } else { w[i] / w[j] });
        Ok(Self { names, a })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn matrix(&self) -> &Matrix {
        &self.a
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[(i, j)]
    }
}

/// Non-negative weights summing to one, aligned with a name list.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    names: Vec<String>,
    w: Vec<f64>,
}

impl WeightVector {
    pub fn new(names: Vec<String>, w: Vec<f64>) -> Result<Self> {
        if names.len() != w.len() {
            return Err(Error::LengthMismatch {
                left: names.len(),
                right: w.len(),
            });
        }
        if w.iter().any(|x| !(x.is_finite() && *x >= 0.0)) {
            return Err(Error::Input(
                "weights must be finite and non-negative".into(),
            ));
        }
        let total: f64 = w.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::Input(format!("weights sum to {total}, expected 1")));
        }
        Ok(Self { names, w })
    }

    /// Scales non-negative `raw` to sum to one.
    pub fn normalized(names: Vec<String>, raw: &[f64]) -> Result<Self> {
        let total: f64 = raw.iter().sum();
        if !(total.is_finite() && total > 0.0) {
            return Err(Error::Degenerate(format!(
                "cannot normalize weights with total {total}"
            )));
        }
        Self::new(names, raw.iter().map(|x| x / total).collect())
    }

    pub fn uniform(names: Vec<String>) -> Self {
        let n = names.len();
        Self {
            names,
            w: vec![1.0 / n as f64; n],
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[f64] {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }
}

/// Comparison matrix of score ratios, `a[i][j] = s_i / s_j` clamped to
/// `[1/9, 9]`.
///
/// Zero scores are floored at [`SCORE_FLOOR`]. Flooring and clamping are
/// reported as warnings.
pub fn build_pairwise(s: &ScoreVector) -> Result<(PairwiseMatrix, Vec<Warning>)> {
    let n = s.len();
    if n < 2 {
        return Err(Error::Structure(format!(
            "need at least 2 alternatives, got {n}"
        )));
    }
    let names = s.names();
    let mut warnings = Vec::new();
    let scores: Vec<f64> = s
        .scores()
        .iter()
        .zip(names)
        .map(|(&v, name)| {
            if !v.is_finite() {
                return Err(Error::Input(format!("score of '{name}' is not finite")));
            }
            if v <= 0.0 {
                warnings.push(Warning::ScoreFloored {
                    name: name.clone(),
                    floor: SCORE_FLOOR,
                });
                Ok(SCORE_FLOOR)
            } else {
                Ok(v)
            }
        })
        .collect::<Result<_>>()?;

    let mut a = Matrix::from_fn(n, n, |_, _| 1.0);
    for i in 0..n {
        for j in i + 1..n {
            let ratio = scores[i] / scores[j];
            let (upper, lower) = if ratio > SCALE_MAX {
                (SCALE_MAX, 1.0 / SCALE_MAX)
            } else if ratio < 1.0 / SCALE_MAX {
                (1.0 / SCALE_MAX, SCALE_MAX)
            } else {
                (ratio, scores[j] / scores[i])
            };
            if upper != ratio {
                warnings.push(Warning::RatioClamped {
                    row: names[i].clone(),
                    col: names[j].clone(),
                    ratio,
                });
            }
            a[(i, j)] = upper;
            a[(j, i)] = lower;
        }
    }
    Ok((
        PairwiseMatrix {
            names: names.to_vec(),
            a,
        },
        warnings,
    ))
}

/// Dominant eigenvector by power iteration from the uniform vector.
///
/// Iterates are renormalized to sum one; iteration stops once successive
/// iterates differ by less than `tol` in max-norm. `lambda_max` is
/// `Σ_i (A w)_i`, which equals the eigenvalue when `w` sums to one.
pub fn principal_eigenvector(
    p: &PairwiseMatrix,
    tol: f64,
    max_iter: usize,
) -> Result<(WeightVector, f64)> {
    if !(tol > 0.0) || max_iter == 0 {
        return Err(Error::Input(format!(
            "tolerance must be positive and max_iter at least 1 (got {tol}, {max_iter})"
        )));
    }
    let n = p.len();
    let mut w = vec![1.0 / n as f64; n];
    for _ in 0..max_iter {
        let mut next = p.a.mul_vec(&w);
        let total: f64 = next.iter().sum();
        next.iter_mut().for_each(|x| *x /= total);
        let delta = next
            .iter()
            .zip(&w)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        w = next;
        if delta < tol {
            let lambda_max = p.a.mul_vec(&w).iter().sum();
            return Ok((WeightVector::new(p.names.clone(), w)?, lambda_max));
        }
    }
    Err(Error::NotConverged {
        iterations: max_iter,
        last: w,
    })
}

/// `(lambda_max - n) / (n - 1)`; zero for `n < 2`.
pub fn consistency_index(lambda_max: f64, n: usize) -> f64 {
    if n < 2 {
        return 0.0;
    }
    (lambda_max - n as f64) / (n as f64 - 1.0)
}

pub fn random_index(n: usize) -> Result<f64> {
    if !(1..=RANDOM_INDEX.len()).contains(&n) {
        return Err(Error::OutOfTable {
            what: "matrix order",
            value: n,
            min: 1,
            max: RANDOM_INDEX.len(),
        });
    }
    Ok(RANDOM_INDEX[n - 1])
}

/// Returns `(cr, cr <= 0.1)`. CR is 0 where the random index is 0.
pub fn consistency_ratio(ci: f64, n: usize) -> Result<(f64, bool)> {
    let ri = random_index(n)?;
    let cr = if ri > 0.0 { ci / ri } else { 0.0 };
    Ok((cr, cr <= CR_THRESHOLD))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport {
    pub lambda_max: f64,
    pub n: usize,
    pub ci: f64,
    pub ri: f64,
    pub cr: f64,
    pub consistent: bool,
}

impl ConsistencyReport {
    /// Evaluates CI and CR for a given principal eigenvalue and order; the
    /// verdict is `cr <= threshold`.
    pub fn evaluate(lambda_max: f64, n: usize, threshold: f64) -> Result<Self> {
        let ci = consistency_index(lambda_max, n);
        let ri = random_index(n)?;
        let (cr, _) = consistency_ratio(ci, n)?;
        Ok(Self {
            lambda_max,
            n,
            ci,
            ri,
            cr,
            consistent: cr <= threshold,
        })
    }
}

/// Principal-eigenvector weights plus the consistency verdict.
pub fn ahp_weights(
    p: &PairwiseMatrix,
    threshold: f64,
) -> Result<(WeightVector, ConsistencyReport)> {
    let (w, lambda_max) = principal_eigenvector(p, DEFAULT_TOLERANCE, DEFAULT_MAX_ITER)?;
    let report = ConsistencyReport::evaluate(lambda_max, p.len(), threshold)?;
    Ok((w, report))
}
