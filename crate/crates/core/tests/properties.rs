mod common;

use std::sync::Arc;

use epslab_core::length::{
    length_of_monomial_quotient, length_via_hilbert_function, standard_monomials_between,
};
use epslab_core::verify::{
    check_additivity_eq2, check_additivity_rmk2, check_modular_law, check_remark21,
};
use epslab_core::{swanson_search, Monomial, MonomialIdeal, QuotientRing, RingIdeal};
use proptest::prelude::*;

fn monomial(arity: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, arity).prop_map(|e| Monomial::new(e).unwrap())
}

fn nonzero_ideal(arity: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(arity, 3), 1..=4)
        .prop_map(move |gens| MonomialIdeal::minimalize(arity, gens).unwrap())
}

fn ideal_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=3).prop_flat_map(|r| (nonzero_ideal(r), nonzero_ideal(r)))
}

fn ideal_triple() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, MonomialIdeal)> {
    (1usize..=3).prop_flat_map(|r| (nonzero_ideal(r), nonzero_ideal(r), nonzero_ideal(r)))
}

/// `(z^a, z*y)` in three variables: nonradical with `dim N < dim R`.
fn nilpotent_ring(a: u32) -> Arc<QuotientRing> {
    let q = common::ideal(3, &[&[0, 0, a], &[0, 1, 1]]);
    Arc::new(QuotientRing::new(vec!["x", "y", "z"], q).unwrap())
}

fn bounded_membership(ideal: &MonomialIdeal, bound: u32) -> Vec<Monomial> {
    (0..=bound)
        .flat_map(|d| epslab_core::monomial::monomials_of_degree(ideal.arity(), d))
        .filter(|u| ideal.member(u).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn generators_form_an_antichain(i in (1usize..=3).prop_flat_map(nonzero_ideal)) {
        let gens = i.generators();
        for (a, g) in gens.iter().enumerate() {
            for (b, h) in gens.iter().enumerate() {
                prop_assert!(a == b || !g.divides(h));
            }
        }
        prop_assert!(gens.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn sum_and_intersection_membership((i, j) in ideal_pair()) {
        let sum = i.add(&j).unwrap();
        let cap = i.intersect(&j).unwrap();
        for d in 0..=6 {
            for u in epslab_core::monomial::monomials_of_degree(i.arity(), d) {
                let (a, b) = (i.member(&u).unwrap(), j.member(&u).unwrap());
                prop_assert_eq!(sum.member(&u).unwrap(), a || b);
                prop_assert_eq!(cap.member(&u).unwrap(), a && b);
            }
        }
    }

    #[test]
    fn product_membership((i, j) in ideal_pair()) {
        let prod = i.multiply(&j).unwrap();
        for u in bounded_membership(&prod, 7) {
            let split = i.generators().iter().any(|g| {
                g.divides(&u) && j.member(&u.quotient_part(g)).unwrap()
            });
            prop_assert!(split);
        }
        prop_assert_eq!(prod, j.multiply(&i).unwrap());
    }

    #[test]
    fn colon_adjunction((i, j) in ideal_pair()) {
        let c = i.colon(&j).unwrap();
        prop_assert!(i.contains(&c.multiply(&j).unwrap()).unwrap());
        for u in epslab_core::monomial::monomials_of_degree(i.arity(), 3) {
            let times_j = MonomialIdeal::principal(u.clone()).multiply(&j).unwrap();
            prop_assert_eq!(c.member(&u).unwrap(), i.contains(&times_j).unwrap());
        }
    }

    #[test]
    fn saturation_algorithms_agree(i in (1usize..=3).prop_flat_map(nonzero_ideal)) {
        let (sat, steps) = i.saturate_max();
        prop_assert_eq!(&sat, &i.saturate_by_variables());
        prop_assert!(sat.contains(&i).unwrap());
        prop_assert_eq!(sat.saturate_max().1, 0);
        if steps == 0 {
            prop_assert_eq!(&sat, &i);
        }
    }

    #[test]
    fn radical_is_idempotent_and_squarefree(i in (1usize..=3).prop_flat_map(nonzero_ideal)) {
        let rad = i.radical();
        prop_assert_eq!(rad.radical(), rad.clone());
        prop_assert!(rad.generators().iter().all(|g| g.exponents().iter().all(|&e| e <= 1)));
        prop_assert!(rad.contains(&i).unwrap());
        prop_assert_eq!(i.dimension().ok(), rad.dimension().ok());
    }

    #[test]
    fn length_engine_matches_oracles((i, j) in ideal_pair()) {
        // Adding outer * m^4 makes the quotient finite.
        let outer = i.add(&j).unwrap();
        let tail = outer.multiply(&MonomialIdeal::maximal_power(i.arity(), 4)).unwrap();
        let inner = i.add(&j.power(2).unwrap()).unwrap().add(&tail).unwrap();
        let engine = length_of_monomial_quotient(&inner, &outer).unwrap();
        let hilbert = length_via_hilbert_function(&inner, &outer).unwrap();
        let brute = standard_monomials_between(&inner, &outer, outer.max_generator_degree() + 4);
        prop_assert_eq!(&engine.value, &hilbert);
        prop_assert_eq!(engine.value, num_bigint::BigUint::from(brute.len()));
        prop_assert_eq!(engine.top_degree, brute.iter().map(|u| u.degree()).max());
    }

    #[test]
    fn modular_law_holds_with_containment((i, j, k) in ideal_triple(), left in any::<bool>()) {
        let (j, k) = if left { (j.intersect(&i).unwrap(), k) } else { (j, k.intersect(&i).unwrap()) };
        let report = check_modular_law(&i, &j, &k).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
    }

    #[test]
    fn quotient_identities_hold((i, j, g) in ideal_triple(), n in 1u32..=3) {
        let report = check_remark21(&i, &j, &g, n).unwrap();
        prop_assert!(report.passed() || g.is_unit(), "{:?}", report);
    }

    #[test]
    fn decomposition_additivity(gens in prop::collection::vec(monomial(3, 2), 1..=3), a in 2u32..=3, n in 1u32..=3) {
        let r = nilpotent_ring(a);
        let i = RingIdeal::from_ambient(&r, &MonomialIdeal::minimalize(3, gens).unwrap()).unwrap();
        let k = check_additivity_rmk2(&i, n).unwrap();
        let c = check_additivity_eq2(&i, n).unwrap();
        prop_assert!(k.passed(), "{:?}", k);
        prop_assert!(c.passed(), "{:?}", c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn swanson_constant_is_monotone_and_explicit(gens in prop::collection::vec(monomial(2, 3), 1..=3)) {
        let r = Arc::new(QuotientRing::polynomial(vec!["x", "y"]).unwrap());
        let i = RingIdeal::from_ambient(&r, &MonomialIdeal::minimalize(2, gens).unwrap()).unwrap();
        prop_assume!(!i.is_unit());
        let nmax = 4;
        let result = swanson_search(&i, nmax, 12).unwrap();
        for b in 1..=12 {
            if result.holds_for(b) {
                prop_assert!(result.holds_for(b + 1));
            }
        }
        // The top-degree criterion against the explicit intersection.
        let powers = i.powers(nmax).unwrap();
        for b in [result.constant.saturating_sub(1).max(1), result.constant] {
            let explicit = powers.iter().zip(1u32..).all(|(p, n)| {
                let mb = MonomialIdeal::maximal_power(2, b * n);
                p.saturate().rep().intersect(&mb).unwrap() == p.rep().intersect(&mb).unwrap()
            });
            prop_assert_eq!(explicit, result.holds_for(b));
        }
    }
}
