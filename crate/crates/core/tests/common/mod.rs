#![allow(dead_code)]

use std::sync::Arc;

use epslab_core::{Monomial, MonomialIdeal, QuotientRing, RingIdeal};
use num_bigint::BigUint;

pub fn mono(exps: &[u32]) -> Monomial {
    Monomial::new(exps.to_vec()).unwrap()
}

pub fn ideal(arity: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(arity, gens.iter().map(|g| mono(g))).unwrap()
}

pub fn ring(names: &[&str], quotient: &[&[u32]]) -> Arc<QuotientRing> {
    let q = ideal(names.len(), quotient);
    Arc::new(QuotientRing::new(names.to_vec(), q).unwrap())
}

pub fn ring_ideal(ring: &Arc<QuotientRing>, gens: &[&[u32]]) -> RingIdeal {
    RingIdeal::from_ambient(ring, &ideal(ring.arity(), gens)).unwrap()
}

/// k[x,y] with I = (x^2, xy).
pub fn plane_example() -> RingIdeal {
    let r = ring(&["x", "y"], &[]);
    ring_ideal(&r, &[&[2, 0], &[1, 1]])
}

/// k[x,y,z]/(z^2, zy) with I = (x^2, xy).
pub fn nilpotent_example() -> RingIdeal {
    let r = ring(&["x", "y", "z"], &[&[0, 0, 2], &[0, 1, 1]]);
    ring_ideal(&r, &[&[2, 0, 0], &[1, 1, 0]])
}

pub fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

pub fn triangular(n: u64) -> BigUint {
    big(n * (n + 1) / 2)
}
