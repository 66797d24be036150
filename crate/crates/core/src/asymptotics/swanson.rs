//! Linear constants `b` with `(I^n)^sat ∩ m^{bn} = I^n ∩ m^{bn}` for all `n`.
//!
//! When `B ⊆ A` with `A/B` of finite length, `A ∩ m^j = B ∩ m^j` holds
//! exactly when every monomial of `A \ B` has degree below `j` (both sides
//! contain `Q`, and a monomial of `A \ B` of degree `>= j` lies in the left
//! side only). The length engine reports that top degree, so a constant is
//! checked per `n` by one comparison.

use rayon::prelude::*;
use serde::Serialize;

use super::sequences::DecompositionPairs;
use crate::error::{Error, Result};
use crate::length::length_quotient;
use crate::ring::RingIdeal;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwansonResult {
    /// Smallest verified constant; `bmax` when none was found.
    pub constant: u32,
    /// Largest `n` checked.
    pub verified_range: u32,
    pub found: bool,
    /// Top degree of the finite-length gap at each `n`, `None` when empty.
    pub top_degrees: Vec<Option<u32>>,
}

impl SwansonResult {
    /// Whether `constant` satisfies the equality at every checked `n`.
    pub fn holds_for(&self, constant: u32) -> bool {
        self.top_degrees
            .iter()
            .zip(1u32..)
            .all(|(top, n)| top.is_none_or(|t| (t as u64) < constant as u64 * n as u64))
    }
}

fn search(top_degrees: Vec<Option<u32>>, nmax: u32, bmax: u32) -> SwansonResult {
    let mut result = SwansonResult {
        constant: bmax,
        verified_range: nmax,
        found: false,
        top_degrees,
    };
    if let Some(b) = (1..=bmax).find(|&b| result.holds_for(b)) {
        result.constant = b;
        result.found = true;
    }
    result
}

fn check_bounds(nmax: u32, bmax: u32) -> Result<()> {
    if nmax == 0 || bmax == 0 {
        return Err(Error::InvalidParameter("search bounds must be at least 1".into()));
    }
    Ok(())
}

/// Smallest `b <= bmax` with `(I^n)^sat ∩ m^{bn} = I^n ∩ m^{bn}` for
/// `n = 1..=nmax`.
pub fn swanson_search(ideal: &RingIdeal, nmax: u32, bmax: u32) -> Result<SwansonResult> {
    check_bounds(nmax, bmax)?;
    let powers = ideal.powers(nmax)?;
    let tops: Vec<Result<Option<u32>>> = powers
        .par_iter()
        .map(|p| Ok(length_quotient(p, &p.saturate())?.top_degree))
        .collect();
    Ok(search(tops.into_iter().collect::<Result<_>>()?, nmax, bmax))
}

/// Smallest `c <= cmax` with `(I^n+N)^sat ∩ m^{cn} = ((I^n)^sat+N) ∩ m^{cn}`
/// for `n = 1..=nmax`.
pub fn swanson_c_search(ideal: &RingIdeal, nmax: u32, cmax: u32) -> Result<SwansonResult> {
    check_bounds(nmax, cmax)?;
    let powers = ideal.powers(nmax)?;
    let tops: Vec<Result<Option<u32>>> = powers
        .into_par_iter()
        .map(|p| {
            let pairs = DecompositionPairs::new(p)?;
            Ok(length_quotient(&pairs.saturated_plus_n, &pairs.sat_of_power_plus_n)?.top_degree)
        })
        .collect();
    Ok(search(tops.into_iter().collect::<Result<_>>()?, nmax, cmax))
}
