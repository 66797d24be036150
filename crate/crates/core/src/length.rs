//! Lengths of finite-length quotients `A/B` of monomial ideals.
//!
//! Over a field the standard monomials form a basis, so `ℓ(A/B)` is the
//! number of monomials in `A` but not in `B`. They are enumerated degree by
//! degree: the level of `A \ B` in degree `e + 1` consists of the
//! generators of `A` of that degree together with the variable multiples of
//! level `e`, minus `B`. A monomial `w ∈ A` of degree `e + 1 > maxdeg(A)` is
//! `x_i * w'` with `w' ∈ A` of degree `e`, and `w' ∈ B` forces `w ∈ B`.
//! Hence once `e >= maxdeg(A)` and level `e` is empty, every later level is
//! empty too and the count is final.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial, MonomialIdeal};
use crate::ring::RingIdeal;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopCertificate {
    /// An empty level at or beyond the largest generator degree of `A`.
    LevelEmptyPastMaxGenDegree,
    BothUnit,
    EqualIdeals,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthResult {
    pub value: BigUint,
    /// Last degree examined.
    pub degree_cutoff: u32,
    pub certificate: StopCertificate,
    /// Largest degree of a monomial in `A \ B`, if any.
    pub top_degree: Option<u32>,
}

/// Whether `ℓ(A/B)` is finite, i.e. `A ⊆ B^sat`. Requires `B ⊆ A`.
pub fn is_finite_colength_pair(inner: &RingIdeal, outer: &RingIdeal) -> Result<bool> {
    check_nested(inner, outer)?;
    inner.rep().saturation().contains(outer.rep())
}

fn check_nested(inner: &RingIdeal, outer: &RingIdeal) -> Result<()> {
    if !outer.contains(inner)? {
        let ring = inner.ring();
        let witness = outer
            .rep()
            .first_missing(inner.rep())
            .map(|g| ring.format_monomial(&g))
            .unwrap_or_default();
        return Err(Error::NotContained(format!(
            "{inner} is not inside {outer} (witness {witness})"
        )));
    }
    Ok(())
}

/// `ℓ_R(A/B)` for ideals `B ⊆ A` of the same ring.
pub fn length_quotient(inner: &RingIdeal, outer: &RingIdeal) -> Result<LengthResult> {
    if !is_finite_colength_pair(inner, outer)? {
        return Err(Error::InfiniteLength(format!("{outer} / {inner}")));
    }
    Ok(count_standard_monomials(outer.rep(), inner.rep()))
}

/// Ambient version of [`length_quotient`] for nested monomial ideals.
pub fn length_of_monomial_quotient(inner: &MonomialIdeal, outer: &MonomialIdeal) -> Result<LengthResult> {
    if !outer.contains(inner)? {
        return Err(Error::NotContained(format!("{inner} is not inside {outer}")));
    }
    if !inner.saturation().contains(outer)? {
        return Err(Error::InfiniteLength(format!("{outer} / {inner}")));
    }
    Ok(count_standard_monomials(outer, inner))
}

/// Counts `outer \ inner`; the caller has certified finiteness.
fn count_standard_monomials(outer: &MonomialIdeal, inner: &MonomialIdeal) -> LengthResult {
    if outer == inner {
        let certificate = if outer.is_unit() {
            StopCertificate::BothUnit
        } else {
            StopCertificate::EqualIdeals
        };
        return LengthResult {
            value: BigUint::default(),
            degree_cutoff: 0,
            certificate,
            top_degree: None,
        };
    }

    let arity = outer.arity();
    let max_degree = outer.max_generator_degree();
    let gens = outer.generators();
    let mut next_gen = 0;
    let mut level: Vec<Monomial> = Vec::new();
    let mut total: u64 = 0;
    let mut top_degree = None;
    let mut degree = 0u32;
    loop {
        let mut candidates: Vec<Monomial> = Vec::with_capacity(level.len() * arity + 4);
        for u in &level {
            for i in 0..arity {
                candidates.push(u.times_variable(i).expect("degree stays far below u32::MAX"));
            }
        }
        while next_gen < gens.len() && gens[next_gen].degree() == degree {
            candidates.push(gens[next_gen].clone());
            next_gen += 1;
        }
        candidates.sort_unstable();
        candidates.dedup();
        candidates.retain(|u| !inner.contains_monomial(u));
        level = candidates;

        if !level.is_empty() {
            total += level.len() as u64;
            top_degree = Some(degree);
        } else if degree >= max_degree {
            return LengthResult {
                value: BigUint::from(total),
                degree_cutoff: degree,
                certificate: StopCertificate::LevelEmptyPastMaxGenDegree,
                top_degree,
            };
        }
        degree += 1;
    }
}

/// Number of degree-`degree` monomials outside `ideal`.
pub fn hilbert_function(ideal: &MonomialIdeal, degree: u32) -> BigUint {
    let count = monomials_of_degree(ideal.arity(), degree)
        .iter()
        .filter(|u| !ideal.contains_monomial(u))
        .count();
    BigUint::from(count)
}

/// `Σ_e [HF(B, e) - HF(A, e)]`, stopping at the first zero term with
/// `e >= maxdeg(A)`. Full per-degree enumeration, independent of the level
/// walk in [`length_quotient`]. Requires `B ⊆ A` with finite colength.
pub fn length_via_hilbert_function(inner: &MonomialIdeal, outer: &MonomialIdeal) -> Result<BigUint> {
    if !outer.contains(inner)? {
        return Err(Error::NotContained(format!("{inner} is not inside {outer}")));
    }
    if !inner.saturation().contains(outer)? {
        return Err(Error::InfiniteLength(format!("{outer} / {inner}")));
    }
    let max_degree = outer.max_generator_degree();
    let mut total = BigUint::default();
    for degree in 0.. {
        let term = hilbert_function(inner, degree) - hilbert_function(outer, degree);
        let empty = term == BigUint::default();
        total += term;
        if empty && degree >= max_degree {
            break;
        }
    }
    Ok(total)
}

/// Monomials of `outer \ inner` up to `max_degree`, by brute force. Used by
/// tests and witnesses.
pub fn standard_monomials_between(
    inner: &MonomialIdeal,
    outer: &MonomialIdeal,
    max_degree: u32,
) -> Vec<Monomial> {
    (0..=max_degree)
        .flat_map(|d| monomials_of_degree(outer.arity(), d))
        .filter(|u| outer.contains_monomial(u) && !inner.contains_monomial(u))
        .collect()
}
