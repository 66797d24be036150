use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::estimate::{estimate_limit, running_estimates, LimitEstimate, RunningEstimate};
use crate::error::{Error, Result};
use crate::length::length_quotient;
use crate::rational::normalize;
use crate::ring::{RingHandle, RingIdeal};

/// The length sequences studied for an ideal `I` of `R` with nilradical `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// `ℓ((I^n)^sat / I^n)`.
    EpsilonCore,
    /// `ℓ(((I^n)^sat + N) / (I^n + N))`.
    ModNOuter,
    /// `ℓ((I^n + N)^sat / (I^n + N))`.
    ModNSat,
    /// `ℓ((I^n + N)^sat / ((I^n)^sat + N))`.
    Correction,
    /// `ℓ(((I^n)^sat ∩ N) / (I^n ∩ N))`.
    NilPart,
    /// `ℓ([(I^m)^sat]^k / I^{mk})` for fixed `m`.
    AmaoInner(u32),
    /// `ℓ(([(I^m)^sat]^k + N) / (I^{mk} + N))` for fixed `m`.
    FiltI(u32),
    /// `ℓ(([(I^m + N)^sat]^k + N) / (I^{mk} + N))` for fixed `m`.
    FiltJ(u32),
}

impl FamilyKind {
    pub fn label(&self) -> &'static str {
        match self {
            FamilyKind::EpsilonCore => "epsilon_core",
            FamilyKind::ModNOuter => "modn_outer",
            FamilyKind::ModNSat => "modn_sat",
            FamilyKind::Correction => "correction",
            FamilyKind::NilPart => "nil_part",
            FamilyKind::AmaoInner(_) => "amao_inner",
            FamilyKind::FiltI(_) => "filt_i",
            FamilyKind::FiltJ(_) => "filt_j",
        }
    }

    /// The fixed `m` of a two-index family.
    pub fn outer_index(&self) -> Option<u32> {
        match self {
            FamilyKind::AmaoInner(m) | FamilyKind::FiltI(m) | FamilyKind::FiltJ(m) => Some(*m),
            _ => None,
        }
    }

    pub const DECOMPOSITION: [FamilyKind; 5] = [
        FamilyKind::EpsilonCore,
        FamilyKind::ModNOuter,
        FamilyKind::ModNSat,
        FamilyKind::Correction,
        FamilyKind::NilPart,
    ];
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.outer_index() {
            Some(m) => write!(f, "{}[m={m}]", self.label()),
            None => f.write_str(self.label()),
        }
    }
}

/// The running index of a record: `n` for one-index families, `k` (with the
/// family's fixed `m`) for two-index families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SequenceIndex(pub u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRecord {
    pub family: FamilyKind,
    pub index: SequenceIndex,
    pub length: BigUint,
    /// `d! ℓ / index^d`.
    pub normalized: BigRational,
}

impl SequenceRecord {
    fn new(family: FamilyKind, index: u32, length: BigUint, d: usize) -> Self {
        let normalized = normalize(&length.clone().into(), index, d);
        SequenceRecord {
            family,
            index: SequenceIndex(index),
            length,
            normalized,
        }
    }

    pub fn n(&self) -> Option<u32> {
        self.family.outer_index().is_none().then_some(self.index.0)
    }

    pub fn m(&self) -> Option<u32> {
        self.family.outer_index()
    }

    pub fn k(&self) -> Option<u32> {
        self.family.outer_index().map(|_| self.index.0)
    }
}

pub fn as_pairs(records: &[SequenceRecord]) -> Vec<(u32, BigUint)> {
    records.iter().map(|r| (r.index.0, r.length.clone())).collect()
}

/// Lengths keyed by family, ring, ideal and index, so that a persisted table
/// can be extended without recomputing what it already holds.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceStore {
    entries: BTreeMap<String, String>,
}

impl SequenceStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn key(family: FamilyKind, ideal: &RingIdeal, index: u32) -> String {
        format!(
            "{}|{}|{}|{}",
            family,
            ideal.ring().fingerprint(),
            ideal.ring().format_ideal(ideal.rep()),
            index
        )
    }

    pub fn get(&self, family: FamilyKind, ideal: &RingIdeal, index: u32) -> Option<BigUint> {
        self.entries
            .get(&Self::key(family, ideal, index))
            .and_then(|v| v.parse().ok())
    }

    pub fn insert(&mut self, family: FamilyKind, ideal: &RingIdeal, index: u32, length: &BigUint) {
        self.entries
            .insert(Self::key(family, ideal, index), length.to_string());
    }

    /// Looks up every index, computes the missing ones in parallel and
    /// records them. Output order follows `indices`.
    fn fill<F>(&mut self, family: FamilyKind, ideal: &RingIdeal, indices: &[u32], compute: F) -> Result<Vec<BigUint>>
    where
        F: Fn(u32) -> Result<BigUint> + Sync,
    {
        let cached: Vec<Option<BigUint>> = indices.iter().map(|&i| self.get(family, ideal, i)).collect();
        let computed: Vec<Result<BigUint>> = indices
            .par_iter()
            .zip(cached.par_iter())
            .map(|(&i, hit)| match hit {
                Some(v) => Ok(v.clone()),
                None => compute(i),
            })
            .collect();
        let mut out = Vec::with_capacity(indices.len());
        for (&i, value) in indices.iter().zip(computed) {
            let value = value?;
            self.insert(family, ideal, i, &value);
            out.push(value);
        }
        Ok(out)
    }
}

fn require_positive(name: &str, value: u32) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

fn len(inner: &RingIdeal, outer: &RingIdeal) -> Result<BigUint> {
    Ok(length_quotient(inner, outer)?.value)
}

fn records(family: FamilyKind, indices: &[u32], lengths: Vec<BigUint>, d: usize) -> Vec<SequenceRecord> {
    indices
        .iter()
        .zip(lengths)
        .map(|(&i, l)| SequenceRecord::new(family, i, l, d))
        .collect()
}

/// `ℓ((I^n)^sat / I^n)` for `n = 1..=nmax`.
pub fn epsilon_sequence(ideal: &RingIdeal, nmax: u32) -> Result<Vec<SequenceRecord>> {
    epsilon_sequence_in(&mut SequenceStore::new(), ideal, nmax)
}

pub fn epsilon_sequence_in(store: &mut SequenceStore, ideal: &RingIdeal, nmax: u32) -> Result<Vec<SequenceRecord>> {
    require_positive("nmax", nmax)?;
    let d = ideal.ring().dimension();
    let indices: Vec<u32> = (1..=nmax).collect();
    let powers = ideal.powers(nmax)?;
    let lengths = store.fill(FamilyKind::EpsilonCore, ideal, &indices, |n| {
        let p = &powers[n as usize - 1];
        len(p, &p.saturate())
    })?;
    Ok(records(FamilyKind::EpsilonCore, &indices, lengths, d))
}

/// The five lengths of the nilradical decomposition at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionRow {
    pub n: u32,
    pub epsilon_core: BigUint,
    pub modn_outer: BigUint,
    pub modn_sat: BigUint,
    pub correction: BigUint,
    pub nil_part: BigUint,
}

impl DecompositionRow {
    /// `ℓ((I^n)^sat/I^n) = ℓ(((I^n)^sat+N)/(I^n+N)) + ℓ(((I^n)^sat∩N)/(I^n∩N))`.
    pub fn kernel_identity_holds(&self) -> bool {
        self.epsilon_core == &self.modn_outer + &self.nil_part
    }

    /// `ℓ(((I^n)^sat+N)/(I^n+N)) = ℓ((I^n+N)^sat/(I^n+N)) - ℓ((I^n+N)^sat/((I^n)^sat+N))`.
    pub fn cokernel_identity_holds(&self) -> bool {
        &self.modn_outer + &self.correction == self.modn_sat
    }

    pub fn get(&self, family: FamilyKind) -> Option<&BigUint> {
        match family {
            FamilyKind::EpsilonCore => Some(&self.epsilon_core),
            FamilyKind::ModNOuter => Some(&self.modn_outer),
            FamilyKind::ModNSat => Some(&self.modn_sat),
            FamilyKind::Correction => Some(&self.correction),
            FamilyKind::NilPart => Some(&self.nil_part),
            _ => None,
        }
    }
}

/// The ideal pairs `(inner, outer)` of the decomposition families at `I^n`.
pub struct DecompositionPairs {
    pub power: RingIdeal,
    pub saturated: RingIdeal,
    pub power_plus_n: RingIdeal,
    pub saturated_plus_n: RingIdeal,
    pub sat_of_power_plus_n: RingIdeal,
    pub power_cap_n: RingIdeal,
    pub saturated_cap_n: RingIdeal,
}

impl DecompositionPairs {
    pub fn new(power: RingIdeal) -> Result<Self> {
        let nil = power.ring().nilradical();
        let saturated = power.saturate();
        let power_plus_n = power.add(&nil)?;
        let saturated_plus_n = saturated.add(&nil)?;
        let sat_of_power_plus_n = power_plus_n.saturate();
        let power_cap_n = power.intersect(&nil)?;
        let saturated_cap_n = saturated.intersect(&nil)?;
        Ok(DecompositionPairs {
            power,
            saturated,
            power_plus_n,
            saturated_plus_n,
            sat_of_power_plus_n,
            power_cap_n,
            saturated_cap_n,
        })
    }

    pub fn pair(&self, family: FamilyKind) -> Option<(&RingIdeal, &RingIdeal)> {
        match family {
            FamilyKind::EpsilonCore => Some((&self.power, &self.saturated)),
            FamilyKind::ModNOuter => Some((&self.power_plus_n, &self.saturated_plus_n)),
            FamilyKind::ModNSat => Some((&self.power_plus_n, &self.sat_of_power_plus_n)),
            FamilyKind::Correction => Some((&self.saturated_plus_n, &self.sat_of_power_plus_n)),
            FamilyKind::NilPart => Some((&self.power_cap_n, &self.saturated_cap_n)),
            _ => None,
        }
    }

    pub fn row(&self, n: u32) -> Result<DecompositionRow> {
        let length = |family| {
            let (inner, outer) = self.pair(family).expect("decomposition family");
            len(inner, outer)
        };
        Ok(DecompositionRow {
            n,
            epsilon_core: length(FamilyKind::EpsilonCore)?,
            modn_outer: length(FamilyKind::ModNOuter)?,
            modn_sat: length(FamilyKind::ModNSat)?,
            correction: length(FamilyKind::Correction)?,
            nil_part: length(FamilyKind::NilPart)?,
        })
    }
}

pub fn decomposition_sequences(ideal: &RingIdeal, nmax: u32) -> Result<Vec<DecompositionRow>> {
    require_positive("nmax", nmax)?;
    let powers = ideal.powers(nmax)?;
    powers
        .into_par_iter()
        .enumerate()
        .map(|(i, p)| DecompositionPairs::new(p)?.row(i as u32 + 1))
        .collect()
}

/// Records of one family from decomposition rows.
pub fn decomposition_records(rows: &[DecompositionRow], family: FamilyKind, d: usize) -> Vec<SequenceRecord> {
    rows.iter()
        .filter_map(|row| {
            row.get(family)
                .map(|l| SequenceRecord::new(family, row.n, l.clone(), d))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmaoRow {
    pub m: u32,
    pub inner: Vec<SequenceRecord>,
    pub estimate: LimitEstimate,
    /// Estimate of `a(I^m, (I^m)^sat)`: the finite-difference value.
    pub amao: BigRational,
    /// `amao / m^d`.
    pub normalized: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmaoGrid {
    pub d: usize,
    pub rows: Vec<AmaoRow>,
}

impl AmaoGrid {
    /// The outer sequence `â(m)/m^d` with running Richardson values.
    pub fn outer_estimates(&self) -> Vec<RunningEstimate> {
        let mut out: Vec<RunningEstimate> = Vec::with_capacity(self.rows.len());
        for (pos, row) in self.rows.iter().enumerate() {
            let richardson = (pos >= 1).then(|| {
                let prev = &self.rows[pos - 1];
                BigRational::from_integer(row.m.into()) * &row.normalized
                    - BigRational::from_integer(prev.m.into()) * &prev.normalized
            });
            out.push(RunningEstimate {
                index: row.m,
                naive: row.normalized.clone(),
                finite_diff: Some(row.amao.clone()),
                richardson,
            });
        }
        out
    }

    /// Best available value of `lim_m â(m)/m^d`: Richardson on the last two
    /// rows when there are two, else the last normalized value.
    pub fn limit_estimate(&self) -> Option<BigRational> {
        let last = self.outer_estimates().pop()?;
        Some(last.richardson.unwrap_or(last.naive))
    }
}

/// The inner Amao sequences `ℓ([(I^m)^sat]^k / I^{mk})` for `m <= mmax`,
/// `k <= kmax`, with an estimate of `a(I^m, (I^m)^sat)` per `m`.
pub fn amao_grid(ideal: &RingIdeal, mmax: u32, kmax: u32) -> Result<AmaoGrid> {
    amao_grid_in(&mut SequenceStore::new(), ideal, mmax, kmax)
}

pub fn amao_grid_in(store: &mut SequenceStore, ideal: &RingIdeal, mmax: u32, kmax: u32) -> Result<AmaoGrid> {
    require_positive("mmax", mmax)?;
    require_positive("kmax", kmax)?;
    let d = ideal.ring().dimension();
    if (kmax as usize) < d + 2 {
        return Err(Error::TooFewEntries {
            needed: d + 2,
            got: kmax as usize,
        });
    }
    let powers = ideal.powers(mmax * kmax)?;
    let indices: Vec<u32> = (1..=kmax).collect();
    let mut rows = Vec::with_capacity(mmax as usize);
    for m in 1..=mmax {
        let family = FamilyKind::AmaoInner(m);
        let saturated = powers[m as usize - 1].saturate();
        let sat_powers = saturated.powers(kmax)?;
        let lengths = store.fill(family, ideal, &indices, |k| {
            len(&powers[(m * k) as usize - 1], &sat_powers[k as usize - 1])
        })?;
        let inner = records(family, &indices, lengths, d);
        let estimate = estimate_limit(&as_pairs(&inner), d)?;
        let amao = estimate.finite_diff.clone();
        let normalized = &amao / BigRational::from_integer(num_traits::pow(m.into(), d));
        rows.push(AmaoRow {
            m,
            inner,
            estimate,
            amao,
            normalized,
        });
    }
    Ok(AmaoGrid { d, rows })
}

/// One-`m` filtration sequences `FiltI(m)` and `FiltJ(m)` over `k <= kmax`,
/// together with the kernel term `ℓ(([(I^m)^sat]^k ∩ N)/(I^{mk} ∩ N))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationSequences {
    pub m: u32,
    pub amao_inner: Vec<SequenceRecord>,
    pub filt_i: Vec<SequenceRecord>,
    pub filt_j: Vec<SequenceRecord>,
    pub kernel: Vec<BigUint>,
}

pub fn filtration_sequences(ideal: &RingIdeal, m: u32, kmax: u32) -> Result<FiltrationSequences> {
    require_positive("m", m)?;
    require_positive("kmax", kmax)?;
    let ring = ideal.ring();
    let d = ring.dimension();
    let nil = ring.nilradical();
    let base = ideal.power(m)?;
    let saturated = base.saturate();
    let sat_plus_n = base.add(&nil)?.saturate();
    let cells: Vec<u32> = (1..=kmax).collect();
    let powers = ideal.powers(m * kmax)?;
    let high_i = saturated.powers(kmax)?;
    let high_j = sat_plus_n.powers(kmax)?;
    let rows: Vec<Result<[BigUint; 4]>> = cells
        .par_iter()
        .map(|&k| {
            let low = &powers[(m * k) as usize - 1];
            let hi = &high_i[k as usize - 1];
            let hj = &high_j[k as usize - 1];
            let low_n = low.add(&nil)?;
            Ok([
                len(low, hi)?,
                len(&low_n, &hi.add(&nil)?)?,
                len(&low_n, &hj.add(&nil)?)?,
                len(&low.intersect(&nil)?, &hi.intersect(&nil)?)?,
            ])
        })
        .collect();
    let mut columns: [Vec<BigUint>; 4] = Default::default();
    for row in rows {
        for (col, v) in columns.iter_mut().zip(row?) {
            col.push(v);
        }
    }
    let [inner, fi, fj, kernel] = columns;
    Ok(FiltrationSequences {
        m,
        amao_inner: records(FamilyKind::AmaoInner(m), &cells, inner, d),
        filt_i: records(FamilyKind::FiltI(m), &cells, fi, d),
        filt_j: records(FamilyKind::FiltJ(m), &cells, fj, d),
        kernel,
    })
}

/// Running estimates of a record list (`d` from the caller).
pub fn tabulate(records: &[SequenceRecord], d: usize) -> Result<Vec<RunningEstimate>> {
    running_estimates(&as_pairs(records), d)
}
