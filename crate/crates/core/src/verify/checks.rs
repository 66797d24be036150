use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::instances::default_names;
use super::report::{containment_witness, equality_witness, CheckReport, LengthTerm, Witness};
use crate::asymptotics::{
    amao_grid, as_pairs, epsilon_sequence, estimate_limit, filtration_sequences, AmaoGrid,
    LimitEstimate, SequenceRecord,
};
use crate::error::{Error, Result};
use crate::length::length_quotient;
use crate::monomial::MonomialIdeal;
use crate::rational::{to_fraction_string, within_relative};
use crate::ring::{QuotientRing, RingHandle, RingIdeal};

pub const MODULAR_LAW: &str = "modular_law";
pub const REMARK21: &str = "quotient_identities";
pub const ADDITIVITY_KERNEL: &str = "additivity_kernel";
pub const ADDITIVITY_COKERNEL: &str = "additivity_cokernel";
pub const GRADED_FAMILY: &str = "graded_family";
pub const LEM7: &str = "filtration_consistency";
pub const VM_THEOREM: &str = "epsilon_vs_amao";

fn describe(ideal: &RingIdeal) -> String {
    format!("{} I={}", ideal.ring().fingerprint(), ideal)
}

/// Evaluates `Σ c_i ℓ(outer_i/inner_i)` with the length engine and reports
/// pass when it vanishes.
fn length_identity(
    check: &str,
    instance: String,
    relation: &str,
    terms: &[(i32, &RingIdeal, &RingIdeal)],
) -> Result<CheckReport> {
    let mut residual = BigInt::zero();
    let mut values = Vec::with_capacity(terms.len());
    for &(c, inner, outer) in terms {
        let l = length_quotient(inner, outer)?.value;
        residual += BigInt::from(c) * BigInt::from(l.clone());
        values.push(l.to_string());
    }
    let detail = format!("{relation} [{}]", values.join(", "));
    if residual.is_zero() {
        return Ok(CheckReport::pass(check, instance, detail));
    }
    let terms = terms
        .iter()
        .map(|&(c, inner, outer)| LengthTerm::new(c, inner.rep(), outer.rep()))
        .collect();
    let witness = Witness::Lengths {
        relation: relation.into(),
        terms,
        residual,
    };
    Ok(CheckReport::fail(check, instance, detail, witness))
}

/// `I ∩ (J + K) = (I ∩ J) + (I ∩ K)` when `J ⊆ I` or `K ⊆ I`.
pub fn check_modular_law(i: &MonomialIdeal, j: &MonomialIdeal, k: &MonomialIdeal) -> Result<CheckReport> {
    let instance = format!("I={i} J={j} K={k}");
    if !i.contains(j)? && !i.contains(k)? {
        return Ok(CheckReport::skipped(MODULAR_LAW, instance, "neither J nor K lies in I"));
    }
    let lhs = i.intersect(&j.add(k)?)?;
    let rhs = i.intersect(j)?.add(&i.intersect(k)?)?;
    Ok(match equality_witness(&lhs, &rhs) {
        None => CheckReport::pass(MODULAR_LAW, instance, format!("both sides {lhs}")),
        Some(w) => CheckReport::fail(MODULAR_LAW, instance, format!("{lhs} vs {rhs}"), w),
    })
}

/// Saturation, power and intersection in `S/G` against the same operations
/// on ambient representatives. `other` and `j` are enlarged by `G` so that
/// the intersection identity has its precondition.
pub fn check_remark21(other: &MonomialIdeal, j: &MonomialIdeal, g: &MonomialIdeal, n: u32) -> Result<CheckReport> {
    if n == 0 || n > 4 {
        return Err(Error::InvalidParameter(format!("power {n} outside 1..=4")));
    }
    let instance = format!("I={other} J={j} G={g} n={n}");
    if g.is_unit() {
        return Ok(CheckReport::skipped(REMARK21, instance, "G is the unit ideal"));
    }
    let ring = Arc::new(QuotientRing::new(default_names(g.arity()), g.clone())?);
    let jr = RingIdeal::from_ambient(&ring, j)?;
    let jn = jr.power(n)?;
    let ambient_jn_g = j.power(n)?.add(g)?;

    // Saturation in R by iterated colon with m_R, against the
    // variable-wise saturation of J^n + G in S.
    let maximal = ring.maximal_ideal();
    let mut sat = jn.clone();
    loop {
        let next = sat.colon(&maximal)?;
        if next == sat {
            break;
        }
        sat = next;
    }
    let ambient_sat = ambient_jn_g.saturate_by_variables();

    let i_g = other.add(g)?;
    let j_g = j.add(g)?;
    let ring_cap = RingIdeal::from_ambient(&ring, &i_g)?.intersect(&RingIdeal::from_ambient(&ring, &j_g)?)?;
    let ambient_cap = i_g.intersect(&j_g)?;

    let parts = [
        ("saturation", sat.rep().clone(), ambient_sat),
        ("power", jn.rep().clone(), ambient_jn_g),
        ("intersection", ring_cap.rep().clone(), ambient_cap),
    ];
    for (name, in_ring, ambient) in parts {
        if let Some(w) = equality_witness(&in_ring, &ambient) {
            return Ok(CheckReport::fail(REMARK21, instance, format!("{name} identity"), w));
        }
    }
    Ok(CheckReport::pass(REMARK21, instance, "saturation, power, intersection"))
}

/// `ℓ((I^n)^sat/I^n) = ℓ(((I^n)^sat+N)/(I^n+N)) + ℓ(((I^n)^sat∩N)/(I^n∩N))`.
pub fn check_additivity_rmk2(ideal: &RingIdeal, n: u32) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let nil = ideal.ring().nilradical();
    let p = ideal.power(n)?;
    let sat = p.saturate();
    let (p_n, sat_n) = (p.add(&nil)?, sat.add(&nil)?);
    let (p_cap, sat_cap) = (p.intersect(&nil)?, sat.intersect(&nil)?);
    length_identity(
        ADDITIVITY_KERNEL,
        format!("{} n={n}", describe(ideal)),
        "core - modn_outer - nil_part",
        &[(1, &p, &sat), (-1, &p_n, &sat_n), (-1, &p_cap, &sat_cap)],
    )
}

/// `(I^n)^sat + N ⊆ (I^n+N)^sat` and
/// `ℓ(((I^n)^sat+N)/(I^n+N)) = ℓ((I^n+N)^sat/(I^n+N)) - ℓ((I^n+N)^sat/((I^n)^sat+N))`.
pub fn check_additivity_eq2(ideal: &RingIdeal, n: u32) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let instance = format!("{} n={n}", describe(ideal));
    let nil = ideal.ring().nilradical();
    let p = ideal.power(n)?;
    let sat_n = p.saturate().add(&nil)?;
    let p_n = p.add(&nil)?;
    let outer = p_n.saturate();
    if let Some(w) = containment_witness(sat_n.rep(), outer.rep()) {
        return Ok(CheckReport::fail(ADDITIVITY_COKERNEL, instance, "containment", w));
    }
    length_identity(
        ADDITIVITY_COKERNEL,
        instance,
        "modn_outer - modn_sat + correction",
        &[(1, &p_n, &sat_n), (-1, &p_n, &outer), (1, &sat_n, &outer)],
    )
}

/// `J'_i J'_j ⊆ J'_{i+j}` and `I'_i I'_j ⊆ I'_{i+j}` for `i + j <= bound`,
/// with `J'_n = (I^n+N)^sat`, `I'_n = (I^n)^sat + N` and both equal to `R`
/// at `n = 0`.
pub fn check_graded_family(ideal: &RingIdeal, bound: u32) -> Result<CheckReport> {
    if bound > 8 {
        return Err(Error::InvalidParameter(format!("bound {bound} exceeds 8")));
    }
    let instance = format!("{} bound={bound}", describe(ideal));
    let ring = ideal.ring();
    let nil = ring.nilradical();
    let mut j_fam = vec![ring.unit_ideal()];
    let mut i_fam = vec![ring.unit_ideal()];
    for p in ideal.powers(bound)? {
        j_fam.push(p.add(&nil)?.saturate());
        i_fam.push(p.saturate().add(&nil)?);
    }
    for (name, fam) in [("J'", &j_fam), ("I'", &i_fam)] {
        for a in 0..=bound as usize {
            for b in a..=bound as usize - a {
                let product = fam[a].multiply(&fam[b])?;
                if let Some(w) = containment_witness(product.rep(), fam[a + b].rep()) {
                    let detail = format!("{name}_{a} {name}_{b} not in {name}_{}", a + b);
                    return Ok(CheckReport::fail(GRADED_FAMILY, instance, detail, w));
                }
            }
        }
    }
    Ok(CheckReport::pass(GRADED_FAMILY, instance, "both families multiplicative"))
}

/// Per `k`: `ℓ([(I^m)^sat]^k/I^{mk}) = ℓ(([(I^m)^sat]^k+N)/(I^{mk}+N)) +
/// ℓ(([(I^m)^sat]^k∩N)/(I^{mk}∩N))`; then the limit of the middle term over
/// `k^d` against that of the left side, within `tolerance`.
pub fn check_lem7_consistency(ideal: &RingIdeal, m: u32, kmax: u32, tolerance: &BigRational) -> Result<CheckReport> {
    if m == 0 || kmax == 0 {
        return Err(Error::InvalidParameter("m and kmax must be at least 1".into()));
    }
    let instance = format!("{} m={m} kmax={kmax}", describe(ideal));
    let nil = ideal.ring().nilradical();
    let powers = ideal.powers(m * kmax)?;
    let sat_powers = ideal.power(m)?.saturate().powers(kmax)?;
    let per_k: Vec<Result<CheckReport>> = (1..=kmax)
        .into_par_iter()
        .map(|k| {
            let low = &powers[(m * k) as usize - 1];
            let high = &sat_powers[k as usize - 1];
            let (low_n, high_n) = (low.add(&nil)?, high.add(&nil)?);
            let (low_cap, high_cap) = (low.intersect(&nil)?, high.intersect(&nil)?);
            length_identity(
                LEM7,
                format!("{instance} k={k}"),
                "amao_inner - filt_i - kernel",
                &[(1, low, high), (-1, &low_n, &high_n), (-1, &low_cap, &high_cap)],
            )
        })
        .collect();
    for report in per_k {
        let report = report?;
        if report.failed() {
            return Ok(report);
        }
    }

    let seqs = filtration_sequences(ideal, m, kmax)?;
    let d = ideal.ring().dimension();
    let filt = estimate_limit(&as_pairs(&seqs.filt_i), d)?.raw_limit();
    let inner = estimate_limit(&as_pairs(&seqs.amao_inner), d)?.raw_limit();
    let detail = format!(
        "filt_i limit {} vs amao_inner limit {}",
        to_fraction_string(&filt),
        to_fraction_string(&inner)
    );
    if within_relative(&filt, &inner, tolerance) {
        Ok(CheckReport::pass(LEM7, instance, detail))
    } else {
        let witness = Witness::Estimates {
            left: filt,
            right: inner,
            tolerance: tolerance.clone(),
        };
        Ok(CheckReport::fail(LEM7, instance, detail, witness))
    }
}

/// Outcome of [`check_vm_theorem`] with both tables it compared.
#[derive(Debug, Clone)]
pub struct VmTheoremCheck {
    pub report: CheckReport,
    pub epsilon: Vec<SequenceRecord>,
    pub epsilon_estimate: LimitEstimate,
    pub grid: AmaoGrid,
}

/// The epsilon estimate from `n <= nmax` against the trend of `â(m)/m^d`
/// for `m <= mmax`. Refuses rings with `dim N = dim R`.
pub fn check_vm_theorem(
    ideal: &RingIdeal,
    mmax: u32,
    nmax: u32,
    kmax: u32,
    tolerance: &BigRational,
) -> Result<VmTheoremCheck> {
    let ring = ideal.ring();
    ring.require_hypothesis()?;
    let d = ring.dimension();
    let epsilon = epsilon_sequence(ideal, nmax)?;
    let epsilon_estimate = estimate_limit(&as_pairs(&epsilon), d)?;
    let grid = amao_grid(ideal, mmax, kmax)?;
    let amao = grid.limit_estimate().expect("mmax >= 1");
    let eps = epsilon_estimate.finite_diff.clone();
    let instance = format!("{} mmax={mmax} nmax={nmax} kmax={kmax}", describe(ideal));
    let detail = format!(
        "epsilon {} vs amao trend {}",
        to_fraction_string(&eps),
        to_fraction_string(&amao)
    );
    let report = if within_relative(&eps, &amao, tolerance) {
        CheckReport::pass(VM_THEOREM, instance, detail)
    } else {
        let witness = Witness::Estimates {
            left: eps,
            right: amao,
            tolerance: tolerance.clone(),
        };
        CheckReport::fail(VM_THEOREM, instance, detail, witness)
    };
    Ok(VmTheoremCheck {
        report,
        epsilon,
        epsilon_estimate,
        grid,
    })
}
