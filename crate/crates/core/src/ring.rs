//! Quotient rings `R = S/Q` by a monomial ideal `Q`, and ideals of `R`.
//!
//! An ideal of `R` is carried by its ambient representative, the monomial
//! ideal of `S` containing `Q` that maps onto it. Every operation on
//! [`RingIdeal`] is one ambient operation followed by re-adding `Q`, so
//! sums, products, powers, intersections, colons and saturations in `R`
//! correspond exactly to the ambient ones modulo `Q`.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Debug, Clone)]
pub struct QuotientRing {
    names: Vec<String>,
    defining: MonomialIdeal,
    nilradical: MonomialIdeal,
    dim: usize,
    nilradical_annihilator: MonomialIdeal,
    dim_nilradical: Option<usize>,
}

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.defining == other.defining
    }
}

impl Eq for QuotientRing {}

impl QuotientRing {
    pub fn new<S: Into<String>>(names: Vec<S>, defining: MonomialIdeal) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let arity = defining.arity();
        if arity == 0 {
            return Err(Error::NoVariables);
        }
        if names.len() != arity {
            return Err(Error::NameCount {
                expected: arity,
                found: names.len(),
            });
        }
        let mut seen = HashSet::new();
        if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
            return Err(Error::DuplicateName(dup.clone()));
        }
        if defining.is_unit() {
            return Err(Error::UnitQuotient);
        }
        let nilradical = defining.radical();
        let dim = defining.dimension()?;
        let nilradical_annihilator = defining.colon(&nilradical)?;
        let dim_nilradical = if nilradical == defining {
            None
        } else {
            Some(nilradical_annihilator.dimension()?)
        };
        Ok(QuotientRing {
            names,
            defining,
            nilradical,
            dim,
            nilradical_annihilator,
            dim_nilradical,
        })
    }

    /// The polynomial ring itself (`Q = 0`).
    pub fn polynomial<S: Into<String>>(names: Vec<S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let arity = names.len();
        QuotientRing::new(names, MonomialIdeal::zero(arity))
    }

    pub fn arity(&self) -> usize {
        self.defining.arity()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn defining_ideal(&self) -> &MonomialIdeal {
        &self.defining
    }

    /// Ambient representative of the nilradical, `rad(Q)`.
    pub fn nilradical_ambient(&self) -> &MonomialIdeal {
        &self.nilradical
    }

    /// `Q : rad(Q)`, the annihilator of `N` lifted to `S`.
    pub fn nilradical_annihilator(&self) -> &MonomialIdeal {
        &self.nilradical_annihilator
    }

    /// Krull dimension `d` of `R`.
    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// Dimension of `N` as an `R`-module; `None` when `N = 0`.
    pub fn nilradical_dimension(&self) -> Option<usize> {
        self.dim_nilradical
    }

    /// Dimension of `N` with the zero module reported as `-1`.
    pub fn nilradical_dimension_signed(&self) -> i64 {
        self.dim_nilradical.map_or(-1, |d| d as i64)
    }

    pub fn is_reduced(&self) -> bool {
        self.dim_nilradical.is_none()
    }

    /// `dim N < dim R`.
    pub fn hypothesis_holds(&self) -> bool {
        self.dim_nilradical.is_none_or(|dn| dn < self.dim)
    }

    pub fn require_hypothesis(&self) -> Result<()> {
        if self.hypothesis_holds() {
            Ok(())
        } else {
            Err(Error::HypothesisViolation {
                dim_nilradical: self.nilradical_dimension_signed(),
                dim_ring: self.dim,
            })
        }
    }

    /// `R/N = S/rad(Q)`.
    pub fn reduced(&self) -> QuotientRing {
        QuotientRing::new(self.names.clone(), self.nilradical.clone())
            .expect("rad(Q) is proper whenever Q is")
    }

    /// Canonical text identifying the ring, e.g. `k[x,y,z]/(z^2, y*z)`.
    pub fn fingerprint(&self) -> String {
        if self.defining.is_zero() {
            return format!("k[{}]", self.names.join(","));
        }
        format!(
            "k[{}]/{}",
            self.names.join(","),
            self.defining.display_with(&self.names)
        )
    }

    pub fn format_ideal(&self, ideal: &MonomialIdeal) -> String {
        ideal.display_with(&self.names).to_string()
    }

    pub fn format_monomial(&self, u: &Monomial) -> String {
        u.display_with(&self.names).to_string()
    }
}

/// Convenience methods producing ideals of a shared ring.
pub trait RingHandle {
    fn ideal<I: IntoIterator<Item = Monomial>>(&self, gens: I) -> Result<RingIdeal>;
    fn zero_ideal(&self) -> RingIdeal;
    fn unit_ideal(&self) -> RingIdeal;
    fn maximal_ideal(&self) -> RingIdeal;
    fn maximal_power(&self, degree: u32) -> RingIdeal;
    fn nilradical(&self) -> RingIdeal;
}

impl RingHandle for Arc<QuotientRing> {
    /// `gens + Q`.
    fn ideal<I: IntoIterator<Item = Monomial>>(&self, gens: I) -> Result<RingIdeal> {
        let arity = self.arity();
        let lifted = MonomialIdeal::minimalize(arity, gens)?;
        RingIdeal::from_ambient(self, &lifted)
    }

    fn zero_ideal(&self) -> RingIdeal {
        RingIdeal {
            ring: Arc::clone(self),
            rep: self.defining.clone(),
        }
    }

    fn unit_ideal(&self) -> RingIdeal {
        RingIdeal {
            ring: Arc::clone(self),
            rep: MonomialIdeal::unit(self.arity()),
        }
    }

    fn maximal_ideal(&self) -> RingIdeal {
        RingIdeal::from_ambient(self, &MonomialIdeal::maximal(self.arity())).expect("same arity")
    }

    fn maximal_power(&self, degree: u32) -> RingIdeal {
        RingIdeal::from_ambient(self, &MonomialIdeal::maximal_power(self.arity(), degree))
            .expect("same arity")
    }

    fn nilradical(&self) -> RingIdeal {
        RingIdeal {
            ring: Arc::clone(self),
            rep: self.nilradical.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingIdeal {
    ring: Arc<QuotientRing>,
    rep: MonomialIdeal,
}

impl RingIdeal {
    /// The image of an ambient ideal `J` in `R`, represented by `J + Q`.
    pub fn from_ambient(ring: &Arc<QuotientRing>, ambient: &MonomialIdeal) -> Result<Self> {
        Ok(RingIdeal {
            ring: Arc::clone(ring),
            rep: ambient.add(&ring.defining)?,
        })
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    /// The ambient representative (always contains `Q`).
    pub fn rep(&self) -> &MonomialIdeal {
        &self.rep
    }

    pub fn is_unit(&self) -> bool {
        self.rep.is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.rep == self.ring.defining
    }

    fn same_ring(&self, other: &RingIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn wrap(&self, ambient: MonomialIdeal) -> Result<RingIdeal> {
        RingIdeal::from_ambient(&self.ring, &ambient)
    }

    pub fn contains(&self, other: &RingIdeal) -> Result<bool> {
        self.same_ring(other)?;
        self.rep.contains(&other.rep)
    }

    pub fn add(&self, other: &RingIdeal) -> Result<RingIdeal> {
        self.same_ring(other)?;
        Ok(RingIdeal {
            ring: Arc::clone(&self.ring),
            rep: self.rep.add(&other.rep)?,
        })
    }

    pub fn multiply(&self, other: &RingIdeal) -> Result<RingIdeal> {
        self.same_ring(other)?;
        self.wrap(self.rep.multiply(&other.rep)?)
    }

    /// `I^n` by repeated multiplication; `I^0 = R`.
    pub fn power(&self, n: u32) -> Result<RingIdeal> {
        let mut acc = self.ring.unit_ideal();
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// `[I, I^2, ..., I^count]`.
    pub fn powers(&self, count: u32) -> Result<Vec<RingIdeal>> {
        let mut out = Vec::with_capacity(count as usize);
        let mut acc = self.ring.unit_ideal();
        for _ in 0..count {
            acc = acc.multiply(self)?;
            out.push(acc.clone());
        }
        Ok(out)
    }

    pub fn intersect(&self, other: &RingIdeal) -> Result<RingIdeal> {
        self.same_ring(other)?;
        self.wrap(self.rep.intersect(&other.rep)?)
    }

    pub fn colon(&self, other: &RingIdeal) -> Result<RingIdeal> {
        self.same_ring(other)?;
        self.wrap(self.rep.colon(&other.rep)?)
    }

    /// `I : m_R^∞`, computed as the ambient saturation of the representative.
    pub fn saturate(&self) -> RingIdeal {
        RingIdeal {
            ring: Arc::clone(&self.ring),
            rep: self.rep.saturation(),
        }
    }

    /// `(I + N)/N` as an ideal of `R/N`, carried by `rep(I) + rad(Q)`.
    pub fn image_mod_nilradical(&self, reduced: &Arc<QuotientRing>) -> Result<RingIdeal> {
        if reduced.defining != self.ring.nilradical || reduced.names != self.ring.names {
            return Err(Error::RingMismatch);
        }
        RingIdeal::from_ambient(reduced, &self.rep)
    }

    /// Ambient generators not already in `Q`.
    pub fn extra_generators(&self) -> Vec<Monomial> {
        self.rep
            .generators()
            .iter()
            .filter(|g| !self.ring.defining.contains_monomial(g))
            .cloned()
            .collect()
    }
}

impl fmt::Display for RingIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep.display_with(&self.ring.names))
    }
}
