mod common;

use common::*;
use epslab_core::asymptotics::{
    amao_grid_in, decomposition_records, epsilon_sequence_in, filtration_sequences, tabulate,
};
use epslab_core::length::length_via_hilbert_function;
use epslab_core::{
    amao_grid, decomposition_sequences, epsilon_sequence, estimate_limit, FamilyKind,
    RingHandle, SequenceStore,
};
use num_bigint::BigUint;
use num_rational::BigRational;

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn pairs(records: &[epslab_core::SequenceRecord]) -> Vec<(u32, BigUint)> {
    epslab_core::asymptotics::as_pairs(records)
}

#[test]
fn epsilon_plane_matches_closed_form_and_enumeration() {
    let i = plane_example();
    let seq = epsilon_sequence(&i, 12).unwrap();
    let powers = i.powers(12).unwrap();
    for (rec, p) in seq.iter().zip(&powers) {
        let n = rec.n().unwrap() as u64;
        assert_eq!(rec.length, triangular(n), "n = {n}");
        let oracle = length_via_hilbert_function(p.rep(), p.saturate().rep()).unwrap();
        assert_eq!(rec.length, oracle);
    }
    let est = estimate_limit(&pairs(&seq), 2).unwrap();
    assert_eq!(est.finite_diff, q(1, 1));
    assert_eq!(est.richardson, q(1, 1));
    assert_eq!(est.raw_limit(), q(1, 2));
    assert!(est.diagnostics.converged);
}

#[test]
fn maximal_ideal_epsilon_is_classical_multiplicity() {
    let r = ring(&["x", "y"], &[]);
    let m = r.maximal_ideal();
    let seq = epsilon_sequence(&m, 12).unwrap();
    for rec in &seq {
        let n = rec.n().unwrap() as u64;
        // (m^n)^sat = R, so the quotient is R/m^n.
        assert_eq!(rec.length, big(n * (n + 1) / 2));
    }
    assert_eq!(estimate_limit(&pairs(&seq), 2).unwrap().finite_diff, q(1, 1));
}

#[test]
fn m_primary_in_three_variables() {
    let r = ring(&["x", "y", "z"], &[]);
    let i = ring_ideal(&r, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    let seq = epsilon_sequence(&i, 7).unwrap();
    let est = estimate_limit(&pairs(&seq), 3).unwrap();
    // e((x^2, y, z)) = 2.
    assert_eq!(est.finite_diff, q(2, 1));
}

#[test]
fn saturated_ideal_has_zero_sequence() {
    let r = ring(&["x", "y"], &[]);
    let i = ring_ideal(&r, &[&[1, 0]]);
    let seq = epsilon_sequence(&i, 6).unwrap();
    assert!(seq.iter().all(|rec| rec.length == big(0)));
    assert_eq!(estimate_limit(&pairs(&seq), 2).unwrap().finite_diff, q(0, 1));
}

#[test]
fn amao_plane_is_m_squared() {
    let i = plane_example();
    let grid = amao_grid(&i, 4, 8).unwrap();
    assert_eq!(grid.d, 2);
    for row in &grid.rows {
        let m = row.m as u64;
        for rec in &row.inner {
            let k = rec.k().unwrap() as u64;
            assert_eq!(rec.m(), Some(row.m));
            assert_eq!(rec.length, triangular(m * k));
        }
        assert_eq!(row.amao, q((m * m) as i64, 1));
        assert_eq!(row.normalized, q(1, 1));
    }
    assert_eq!(grid.limit_estimate(), Some(q(1, 1)));
}

#[test]
fn amao_inner_matches_enumeration() {
    let i = nilpotent_example();
    let grid = amao_grid(&i, 2, 5).unwrap();
    let powers = i.powers(10).unwrap();
    for row in &grid.rows {
        let sat = powers[row.m as usize - 1].saturate();
        for rec in &row.inner {
            let k = rec.k().unwrap();
            let low = &powers[(row.m * k) as usize - 1];
            let high = sat.power(k).unwrap();
            let oracle = length_via_hilbert_function(low.rep(), high.rep()).unwrap();
            assert_eq!(rec.length, oracle, "m = {}, k = {k}", row.m);
        }
    }
}

#[test]
fn amao_nilpotent_closed_form() {
    let i = nilpotent_example();
    let grid = amao_grid(&i, 3, 6).unwrap();
    for row in &grid.rows {
        let m = row.m as u64;
        for rec in &row.inner {
            let k = rec.k().unwrap() as u64;
            assert_eq!(rec.length, triangular(m * k) + big(m * k + m));
        }
        assert_eq!(row.amao, q((m * m) as i64, 1));
    }
}

#[test]
fn amao_requires_enough_k() {
    let i = plane_example();
    assert!(amao_grid(&i, 2, 3).is_err());
}

#[test]
fn nilpotent_decomposition_closed_forms() {
    let i = nilpotent_example();
    let rows = decomposition_sequences(&i, 8).unwrap();
    for row in &rows {
        let n = row.n as u64;
        assert_eq!(row.epsilon_core, triangular(n) + big(2 * n));
        assert_eq!(row.nil_part, big(2 * n));
        assert_eq!(row.modn_outer, triangular(n));
        assert_eq!(row.modn_sat, triangular(n));
        assert_eq!(row.correction, big(0));
        assert!(row.kernel_identity_holds());
        assert!(row.cokernel_identity_holds());
    }
    let nil = decomposition_records(&rows, FamilyKind::NilPart, 2);
    let at4 = nil[3].normalized.clone();
    assert!(nil[3..].iter().all(|r| r.normalized <= at4));
}

#[test]
fn decomposition_matches_enumeration() {
    let r = ring(&["x", "y", "z"], &[&[0, 0, 3], &[1, 0, 1]]);
    let i = ring_ideal(&r, &[&[0, 2, 0], &[0, 1, 1]]);
    let rows = decomposition_sequences(&i, 4).unwrap();
    let nil = r.nilradical();
    for (row, p) in rows.iter().zip(i.powers(4).unwrap()) {
        let sat = p.saturate();
        let core = length_via_hilbert_function(p.rep(), sat.rep()).unwrap();
        let cap = length_via_hilbert_function(
            p.intersect(&nil).unwrap().rep(),
            sat.intersect(&nil).unwrap().rep(),
        )
        .unwrap();
        assert_eq!(row.epsilon_core, core);
        assert_eq!(row.nil_part, cap);
    }
}

#[test]
fn filtration_nilpotent_closed_forms() {
    let i = nilpotent_example();
    for m in 1..=2u32 {
        let f = filtration_sequences(&i, m, 6).unwrap();
        for (pos, k) in (1..=6u64).enumerate() {
            let mk = m as u64 * k;
            assert_eq!(f.filt_i[pos].length, triangular(mk));
            assert_eq!(f.kernel[pos], big(mk + m as u64));
            assert_eq!(f.amao_inner[pos].length, &f.filt_i[pos].length + &f.kernel[pos]);
            assert!(f.filt_j[pos].length >= f.filt_i[pos].length);
        }
    }
}

#[test]
fn reduced_ring_filtrations_coincide() {
    let i = plane_example();
    let f = filtration_sequences(&i, 2, 5).unwrap();
    for (a, b) in f.amao_inner.iter().zip(&f.filt_i) {
        assert_eq!(a.length, b.length);
    }
    assert!(f.kernel.iter().all(|v| *v == big(0)));
}

#[test]
fn zero_dimensional_ring() {
    let r = ring(&["x"], &[&[3]]);
    assert_eq!(r.dimension(), 0);
    let i = ring_ideal(&r, &[&[1]]);
    let seq = epsilon_sequence(&i, 5).unwrap();
    let lengths: Vec<BigUint> = seq.iter().map(|s| s.length.clone()).collect();
    assert_eq!(lengths, [1u32, 2, 3, 3, 3].map(BigUint::from));
    // d = 0: normalization is the identity.
    assert_eq!(seq[4].normalized, q(3, 1));
    let est = estimate_limit(&pairs(&seq), 0).unwrap();
    assert_eq!(est.finite_diff, q(3, 1));
    assert_eq!(est.raw_limit(), q(3, 1));
    let grid = amao_grid(&i, 2, 3).unwrap();
    assert_eq!(grid.rows[0].amao, q(3, 1));
}

#[test]
fn store_reuses_and_extends() {
    let i = plane_example();
    let mut store = SequenceStore::new();
    let short = epsilon_sequence_in(&mut store, &i, 4).unwrap();
    assert_eq!(store.len(), 4);
    let long = epsilon_sequence_in(&mut store, &i, 8).unwrap();
    assert_eq!(store.len(), 8);
    assert_eq!(&long[..4], &short[..]);
    let json = serde_json::to_string(&store).unwrap();
    let mut back: SequenceStore = serde_json::from_str(&json).unwrap();
    assert_eq!(back, store);
    let grid = amao_grid_in(&mut back, &i, 2, 4).unwrap();
    assert_eq!(grid, amao_grid(&i, 2, 4).unwrap());
    assert_eq!(back.len(), 16);
}

#[test]
fn tabulated_estimates_follow_the_sequence() {
    let i = plane_example();
    let seq = epsilon_sequence(&i, 5).unwrap();
    let rows = tabulate(&seq, 2).unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0].finite_diff, None);
    assert_eq!(rows[2].finite_diff, Some(q(1, 1)));
    assert_eq!(rows[4].naive, q(2 * 15, 25));
}
