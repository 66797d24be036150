//! Limit estimators for sequences `ℓ_n ~ L n^d`.
//!
//! All three estimators target the normalized limit `d! L`:
//! - `naive`: `d! ℓ_n / n^d` at the last index;
//! - `finite_diff`: the `d`-th forward difference `Δ^d ℓ` ending at the last
//!   index, exact for polynomial sequences of degree `d`;
//! - `richardson`: one step of extrapolation of the naive values under a
//!   `c + a/n` model, `n s_n - (n - 1) s_{n-1}`.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{factorial, normalize, within_relative};

/// Relative tolerance between the last two finite differences below which
/// an estimate counts as converged.
pub fn default_tolerance() -> BigRational {
    BigRational::new(1.into(), 20.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EstimateDiagnostics {
    pub finite_diff_previous: BigRational,
    /// Max minus min of the last `TAIL_WINDOW` available `d`-th differences.
    pub tail_spread: BigRational,
    pub naive_nonincreasing: bool,
    pub naive_nondecreasing: bool,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimitEstimate {
    pub d: usize,
    pub last_index: u32,
    pub naive_last: BigRational,
    pub finite_diff: BigRational,
    pub richardson: BigRational,
    pub diagnostics: EstimateDiagnostics,
}

impl LimitEstimate {
    /// `lim ℓ_n / n^d`, i.e. the finite-difference estimate divided by `d!`.
    pub fn raw_limit(&self) -> BigRational {
        &self.finite_diff / BigRational::from_integer(factorial(self.d))
    }
}

/// Per-index estimator values, for tabulating a sequence as it grows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunningEstimate {
    pub index: u32,
    pub naive: BigRational,
    pub finite_diff: Option<BigRational>,
    pub richardson: Option<BigRational>,
}

/// Number of trailing `d`-th differences compared for convergence. Three
/// catches the period-2 and period-3 oscillation of quasi-polynomial
/// sequences.
pub const TAIL_WINDOW: usize = 3;

fn check_indices(seq: &[(u32, BigUint)]) -> Result<()> {
    if seq.first().is_some_and(|(i, _)| *i == 0) {
        return Err(Error::NonConsecutive);
    }
    if seq.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
        return Err(Error::NonConsecutive);
    }
    Ok(())
}

/// `Δ^d` of `values` over the window ending at `end` (inclusive).
fn forward_difference(values: &[BigInt], end: usize, d: usize) -> BigInt {
    let start = end - d;
    (0..=d).fold(BigInt::zero(), |acc, j| {
        let term = binomial(BigInt::from(d), BigInt::from(j)) * &values[start + j];
        if (d - j).is_multiple_of(2) {
            acc + term
        } else {
            acc - term
        }
    })
}

fn richardson_step(prev_index: u32, prev: &BigRational, index: u32, cur: &BigRational) -> BigRational {
    BigRational::from_integer(index.into()) * cur - BigRational::from_integer(prev_index.into()) * prev
}

pub fn running_estimates(seq: &[(u32, BigUint)], d: usize) -> Result<Vec<RunningEstimate>> {
    check_indices(seq)?;
    let values: Vec<BigInt> = seq.iter().map(|(_, v)| BigInt::from(v.clone())).collect();
    let naive: Vec<BigRational> = seq
        .iter()
        .zip(&values)
        .map(|((i, _), v)| normalize(v, *i, d))
        .collect();
    Ok(seq
        .iter()
        .enumerate()
        .map(|(pos, (index, _))| RunningEstimate {
            index: *index,
            naive: naive[pos].clone(),
            finite_diff: (pos >= d).then(|| BigRational::from_integer(forward_difference(&values, pos, d))),
            richardson: (pos >= 1)
                .then(|| richardson_step(seq[pos - 1].0, &naive[pos - 1], *index, &naive[pos])),
        })
        .collect())
}

pub fn estimate_limit(seq: &[(u32, BigUint)], d: usize) -> Result<LimitEstimate> {
    estimate_limit_with_tolerance(seq, d, &default_tolerance())
}

/// Needs at least `d + 2` consecutive entries so that two `d`-th
/// differences are available.
pub fn estimate_limit_with_tolerance(
    seq: &[(u32, BigUint)],
    d: usize,
    tolerance: &BigRational,
) -> Result<LimitEstimate> {
    if seq.len() < d + 2 {
        return Err(Error::TooFewEntries {
            needed: d + 2,
            got: seq.len(),
        });
    }
    let running = running_estimates(seq, d)?;
    let last = running.last().expect("non-empty");
    let prev = &running[running.len() - 2];
    let finite_diff = last.finite_diff.clone().expect("window exceeds d");
    let finite_diff_previous = prev.finite_diff.clone().expect("window exceeds d");
    let tail: Vec<&BigRational> = running
        .iter()
        .rev()
        .take(TAIL_WINDOW)
        .filter_map(|r| r.finite_diff.as_ref())
        .collect();
    let high = tail.iter().copied().max().expect("two differences");
    let low = tail.iter().copied().min().expect("two differences");
    let tail_spread = high - low;
    let converged = within_relative(high, low, tolerance);
    let naive_nonincreasing = running.windows(2).all(|w| w[1].naive <= w[0].naive);
    let naive_nondecreasing = running.windows(2).all(|w| w[1].naive >= w[0].naive);
    Ok(LimitEstimate {
        d,
        last_index: last.index,
        naive_last: last.naive.clone(),
        finite_diff,
        richardson: last.richardson.clone().expect("at least two entries"),
        diagnostics: EstimateDiagnostics {
            finite_diff_previous,
            tail_spread,
            naive_nonincreasing,
            naive_nondecreasing,
            converged,
        },
    })
}
