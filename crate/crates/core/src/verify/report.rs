use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::length::length_via_hilbert_function;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::rational::{to_fraction_string, within_relative};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Precondition not met; nothing was asserted.
    Skipped,
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        }
    }
}

/// Counterexample data that can be re-checked on its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `monomial` lies in `present` but not in `absent`.
    Membership {
        monomial: Monomial,
        present: MonomialIdeal,
        absent: MonomialIdeal,
    },
    /// A length identity `Σ c_i ℓ(outer_i/inner_i) = 0` with nonzero
    /// left side `residual`.
    Lengths {
        relation: String,
        terms: Vec<LengthTerm>,
        residual: BigInt,
    },
    /// Two limit estimates outside the relative tolerance.
    Estimates {
        left: BigRational,
        right: BigRational,
        tolerance: BigRational,
    },
}

impl Witness {
    /// Re-evaluates the counterexample; `true` means it still fails.
    pub fn replays(&self) -> bool {
        match self {
            Witness::Membership {
                monomial,
                present,
                absent,
            } => {
                present.member(monomial).unwrap_or(false) && !absent.member(monomial).unwrap_or(true)
            }
            Witness::Lengths { terms, .. } => match signed_sum(terms) {
                Ok(total) => !total.is_zero(),
                Err(_) => true,
            },
            Witness::Estimates {
                left,
                right,
                tolerance,
            } => !within_relative(left, right, tolerance),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Membership {
                monomial,
                present,
                absent,
            } => write!(f, "{monomial} in {present} but not in {absent}"),
            Witness::Lengths {
                relation, residual, ..
            } => write!(f, "{relation}: signed sum is {residual}, not 0"),
            Witness::Estimates {
                left,
                right,
                tolerance,
            } => write!(
                f,
                "{} vs {} beyond relative tolerance {}",
                to_fraction_string(left),
                to_fraction_string(right),
                to_fraction_string(tolerance)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthTerm {
    pub coefficient: i32,
    pub inner: MonomialIdeal,
    pub outer: MonomialIdeal,
}

impl LengthTerm {
    pub fn new(coefficient: i32, inner: &MonomialIdeal, outer: &MonomialIdeal) -> Self {
        LengthTerm {
            coefficient,
            inner: inner.clone(),
            outer: outer.clone(),
        }
    }
}

/// `Σ c_i ℓ(outer_i/inner_i)` by Hilbert-function enumeration, independent
/// of the level walk used by the checks.
pub fn signed_sum(terms: &[LengthTerm]) -> crate::Result<BigInt> {
    let mut total = BigInt::zero();
    for t in terms {
        let l = length_via_hilbert_function(&t.inner, &t.outer)?;
        total += BigInt::from(t.coefficient) * BigInt::from(l);
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    pub status: Status,
    pub detail: String,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn pass(check: &str, instance: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            instance: instance.into(),
            status: Status::Pass,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn fail(check: &str, instance: impl Into<String>, detail: impl Into<String>, witness: Witness) -> Self {
        CheckReport {
            check: check.into(),
            instance: instance.into(),
            status: Status::Fail,
            detail: detail.into(),
            witness: Some(witness),
        }
    }

    pub fn skipped(check: &str, instance: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            instance: instance.into(),
            status: Status::Skipped,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        reports.iter().fold(Summary::default(), |mut s, r| {
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
            }
            s
        })
    }
}

/// A monomial showing `lhs != rhs`, if they differ.
pub fn equality_witness(lhs: &MonomialIdeal, rhs: &MonomialIdeal) -> Option<Witness> {
    containment_witness(lhs, rhs).or_else(|| containment_witness(rhs, lhs))
}

/// A monomial showing `small ⊄ big`, if so.
pub fn containment_witness(small: &MonomialIdeal, big: &MonomialIdeal) -> Option<Witness> {
    big.first_missing(small).map(|monomial| Witness::Membership {
        monomial,
        present: small.clone(),
        absent: big.clone(),
    })
}
