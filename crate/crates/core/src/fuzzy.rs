//! Triangular fuzzy numbers, the nine-step fuzzy comparison scale, and
//! extent-analysis weighting by degree of possibility.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use crate::ahp::{PairwiseMatrix, WeightVector};
use crate::diag::Warning;
use crate::error::{Error, Result};

/// Triangular fuzzy number `(l, m, u)` with `l <= m <= u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tfn {
    pub l: f64,
    pub m: f64,
    pub u: f64,
}

impl Tfn {
    pub const ONE: Tfn = Tfn {
        l: 1.0,
        m: 1.0,
        u: 1.0,
    };
    pub const ZERO: Tfn = Tfn {
        l: 0.0,
        m: 0.0,
        u: 0.0,
    };

    pub fn new(l: f64, m: f64, u: f64) -> Result<Self> {
        if !(l.is_finite() && m.is_finite() && u.is_finite()) || l > m || m > u {
            return Err(Error::Domain(format!(
                "({l}, {m}, {u}) is not ordered l <= m <= u"
            )));
        }
        Ok(Self { l, m, u })
    }

    /// `(1/u, 1/m, 1/l)`; requires `l > 0`.
    pub fn inverse(self) -> Result<Self> {
        if !(self.l > 0.0) {
            return Err(Error::Domain(format!("cannot invert {self} with l <= 0")));
        }
        Ok(Self {
            l: 1.0 / self.u,
            m: 1.0 / self.m,
            u: 1.0 / self.l,
        })
    }
}

impl Add for Tfn {
    type Output = Tfn;

    fn add(self, rhs: Tfn) -> Tfn {
        Tfn {
            l: self.l + rhs.l,
            m: self.m + rhs.m,
            u: self.u + rhs.u,
        }
    }
}

impl core::iter::Sum for Tfn {
    fn sum<I: Iterator<Item = Tfn>>(iter: I) -> Tfn {
        iter.fold(Tfn::ZERO, Add::add)
    }
}

impl fmt::Display for Tfn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.l, self.m, self.u)
    }
}

const fn tfn(l: f64, m: f64, u: f64) -> Tfn {
    Tfn { l, m, u }
}

/// Fuzzy counterparts of the crisp intensities 1 through 9.
const SCALE: [Tfn; 9] = [
    tfn(1.0, 1.0, 1.0),
    tfn(1.0 / 2.0, 3.0 / 4.0, 1.0),
    tfn(2.0 / 3.0, 1.0, 3.0 / 2.0),
    tfn(1.0, 3.0 / 2.0, 2.0),
    tfn(3.0 / 2.0, 2.0, 5.0 / 2.0),
    tfn(2.0, 5.0 / 2.0, 3.0),
    tfn(5.0 / 2.0, 3.0, 7.0 / 2.0),
    tfn(3.0, 7.0 / 2.0, 4.0),
    tfn(7.0 / 2.0, 4.0, 9.0 / 2.0),
];

pub fn saaty_to_tfn(intensity: u8) -> Result<Tfn> {
    match intensity {
        1..=9 => Ok(SCALE[usize::from(intensity) - 1]),
        _ => Err(Error::OutOfTable {
            what: "scale intensity",
            value: usize::from(intensity),
            min: 1,
            max: 9,
        }),
    }
}

/// Nearest integer intensity in 1..=9 for a crisp ratio `>= 1`; halves
/// round up.
fn intensity_of(ratio: f64) -> u8 {
    // ratio >= 1 and finite here, so truncation of ratio + 0.5 rounds
    let rounded = (ratio + 0.5) as u64;
    rounded.clamp(1, 9) as u8
}

/// Square matrix of TFNs with `(1, 1, 1)` on the diagonal and
/// `f[j][i] = inverse(f[i][j])`.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyPairwiseMatrix {
    names: Vec<String>,
    f: Vec<Tfn>,
}

impl FuzzyPairwiseMatrix {
    /// Checks the diagonal and that the lower triangle holds the exact
    /// inverses of the upper one. `entries` is row-major, `n * n` long.
    pub fn new(names: Vec<String>, entries: Vec<Tfn>) -> Result<Self> {
        let n = names.len();
        if entries.len() != n * n {
            return Err(Error::Structure(format!(
                "{} fuzzy entries for {n} alternatives",
                entries.len()
            )));
        }
        let out = Self { names, f: entries };
        for i in 0..n {
            if out.get(i, i) != Tfn::ONE {
                return Err(Error::Input(format!(
                    "diagonal entry {i} is {}",
                    out.get(i, i)
                )));
            }
            for j in i + 1..n {
                if out.get(j, i) != out.get(i, j).inverse()? {
                    return Err(Error::Input(format!(
                        "entry ({j}, {i}) is not the inverse of ({i}, {j})"
                    )));
                }
            }
        }
        Ok(out)
    }

    /// Fills the lower triangle from strictly-upper entries given in
    /// row-major order: `(0,1), (0,2), …, (1,2), …`.
    pub fn from_upper(names: Vec<String>, upper: &[Tfn]) -> Result<Self> {
        let n = names.len();
        if upper.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::Structure(format!(
                "{} upper entries for {n} alternatives",
                upper.len()
            )));
        }
        let mut f = alloc::vec![Tfn::ONE; n * n];
        let mut it = upper.iter();
        for i in 0..n {
            for j in i + 1..n {
                let t = *it.next().expect("length checked");
                if t.l > t.m || t.m > t.u {
                    return Err(Error::Domain(format!(
                        "entry ({i}, {j}) = {t} is not ordered"
                    )));
                }
                f[i * n + j] = t;
                f[j * n + i] = t.inverse()?;
            }
        }
        Ok(Self { names, f })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> Tfn {
        self.f[i * self.len() + j]
    }

    pub fn row(&self, i: usize) -> &[Tfn] {
        let n = self.len();
        &self.f[i * n..(i + 1) * n]
    }
}

/// Maps each upper-triangle crisp ratio onto the fuzzy scale.
///
/// Ratios `>= 1` use the scale entry of their rounded intensity; ratios
/// below 1 use the inverse of the entry for the rounded reciprocal.
pub fn build_fuzzy_pairwise(p: &PairwiseMatrix) -> FuzzyPairwiseMatrix {
    let n = p.len();
    let mut upper = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let a = p.get(i, j);
            let t = if a >= 1.0 {
                SCALE[usize::from(intensity_of(a)) - 1]
            } else {
                let base = SCALE[usize::from(intensity_of(1.0 / a)) - 1];
                base.inverse().expect("scale entries are positive")
            };
            upper.push(t);
        }
    }
    FuzzyPairwiseMatrix::from_upper(p.names().to_vec(), &upper).expect("scale entries are valid")
}

/// Fuzzy synthetic extents `S_i`, one per alternative.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtentVector {
    names: Vec<String>,
    s: Vec<Tfn>,
}

impl ExtentVector {
    pub fn new(names: Vec<String>, s: Vec<Tfn>) -> Result<Self> {
        if names.len() != s.len() {
            return Err(Error::LengthMismatch {
                left: names.len(),
                right: s.len(),
            });
        }
        if let Some(bad) = s
            .iter()
            .find(|t| !(t.l > 0.0 && t.l <= t.m && t.m <= t.u && t.u.is_finite()))
        {
            return Err(Error::Domain(format!(
                "extent {bad} is not a positive ordered TFN"
            )));
        }
        Ok(Self { names, s })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn extents(&self) -> &[Tfn] {
        &self.s
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }
}

/// `S_i = (Σ_j l_ij / Σ u, Σ_j m_ij / Σ m, Σ_j u_ij / Σ l)`, each row sum
/// divided by the inverted grand total.
pub fn synthetic_extents(f: &FuzzyPairwiseMatrix) -> Result<ExtentVector> {
    let rows: Vec<Tfn> = (0..f.len())
        .map(|i| f.row(i).iter().copied().sum())
        .collect();
    let total: Tfn = rows.iter().copied().sum();
    if !(total.l > 0.0) {
        return Err(Error::Domain(format!(
            "grand total {total} is not positive"
        )));
    }
    let s = rows
        .iter()
        .map(|r| Tfn {
            l: r.l / total.u,
            m: r.m / total.m,
            u: r.u / total.l,
        })
        .collect();
    ExtentVector::new(f.names().to_vec(), s)
}

/// Degree of possibility `V(m2 >= m1)`.
///
/// 1 when `m2.m >= m1.m`, 0 when `m1.l >= m2.u`, otherwise the height of the
/// crossing between the right flank of `m2` and the left flank of `m1`.
pub fn degree_of_possibility(m2: Tfn, m1: Tfn) -> f64 {
    if m2.m >= m1.m {
        return 1.0;
    }
    if m1.l >= m2.u {
        return 0.0;
    }
    let denominator = (m2.m - m2.u) - (m1.m - m1.l);
    if denominator == 0.0 {
        return 0.0;
    }
    ((m1.l - m2.u) / denominator).clamp(0.0, 1.0)
}

/// Normalized minimum possibility degrees.
///
/// `d_i = min_{j != i} V(S_i >= S_j)`, `w_i = d_i / Σ d`. If every `d_i` is
/// zero the weights fall back to uniform with [`Warning::UniformFallback`].
pub fn fuzzy_weights(e: &ExtentVector) -> Result<(WeightVector, Vec<Warning>)> {
    let n = e.len();
    if n < 2 {
        return Err(Error::Structure(format!(
            "need at least 2 extents, got {n}"
        )));
    }
    let s = e.extents();
    let d: Vec<f64> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i)
                .map(|j| degree_of_possibility(s[i], s[j]))
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    if d.iter().sum::<f64>() == 0.0 {
        return Ok((
            WeightVector::uniform(e.names().to_vec()),
            alloc::vec![Warning::UniformFallback],
        ));
    }
    Ok((
        WeightVector::normalized(e.names().to_vec(), &d)?,
        Vec::new(),
    ))
}

/// Full fuzzy branch from a crisp comparison matrix.
pub fn fuzzy_ahp_weights(p: &PairwiseMatrix) -> Result<(WeightVector, Vec<Warning>)> {
    let f = build_fuzzy_pairwise(p);
    let e = synthetic_extents(&f)?;
    fuzzy_weights(&e)
}
