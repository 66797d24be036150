use std::sync::Arc;

use num_rational::BigRational;
use rayon::prelude::*;

use super::checks::{
    check_additivity_eq2, check_additivity_rmk2, check_graded_family, check_lem7_consistency,
    check_modular_law, check_remark21, check_vm_theorem, LEM7, VM_THEOREM,
};
use super::instances::InstanceGen;
use super::report::CheckReport;
use crate::asymptotics::default_tolerance;
use crate::error::Result;
use crate::monomial::MonomialIdeal;
use crate::ring::{QuotientRing, RingIdeal};

/// Instance counts of the randomized run.
#[derive(Debug, Clone)]
pub struct PropertySuite {
    pub seed: u64,
    pub modular_law: usize,
    pub remark21: usize,
    pub graded_family: usize,
    pub graded_bound: u32,
    pub additivity: usize,
    pub additivity_nmax: u32,
}

impl PropertySuite {
    pub fn new(seed: u64) -> Self {
        PropertySuite {
            seed,
            modular_law: 200,
            remark21: 100,
            graded_family: 20,
            graded_bound: 6,
            additivity: 20,
            additivity_nmax: 4,
        }
    }
}

enum Task {
    Modular(MonomialIdeal, MonomialIdeal, MonomialIdeal),
    Remark(MonomialIdeal, MonomialIdeal, MonomialIdeal, u32),
    Graded(RingIdeal, u32),
    Additivity(RingIdeal, u32),
}

impl Task {
    fn run(&self) -> Result<Vec<CheckReport>> {
        Ok(match self {
            Task::Modular(i, j, k) => vec![check_modular_law(i, j, k)?],
            Task::Remark(i, j, g, n) => vec![check_remark21(i, j, g, *n)?],
            Task::Graded(ideal, bound) => vec![check_graded_family(ideal, *bound)?],
            Task::Additivity(ideal, nmax) => {
                let mut out = Vec::with_capacity(2 * *nmax as usize);
                for n in 1..=*nmax {
                    out.push(check_additivity_rmk2(ideal, n)?);
                    out.push(check_additivity_eq2(ideal, n)?);
                }
                out
            }
        })
    }
}

/// An ideal that is nonzero in its ring.
fn ring_instance(gen: &mut InstanceGen) -> RingIdeal {
    let ring: Arc<QuotientRing> = gen.ring();
    loop {
        let ideal = gen.ideal(ring.arity());
        let ideal = RingIdeal::from_ambient(&ring, &ideal).expect("same arity");
        if !ideal.is_zero() {
            return ideal;
        }
    }
}

fn tasks(suite: &PropertySuite) -> Vec<Task> {
    let mut out = Vec::new();
    let mut gen = InstanceGen::new(suite.seed);
    for _ in 0..suite.modular_law {
        let r = gen.arity();
        let (i, mut j, mut k) = (gen.ideal(r), gen.ideal(r), gen.ideal(r));
        if gen.coin() {
            j = j.intersect(&i).expect("same arity");
        } else {
            k = k.intersect(&i).expect("same arity");
        }
        out.push(Task::Modular(i, j, k));
    }
    for _ in 0..suite.remark21 {
        let r = gen.arity();
        let (i, j) = (gen.ideal(r), gen.ideal(r));
        let g = if r >= 2 && gen.coin() {
            gen.nonradical_quotient_ideal(r)
        } else {
            gen.ideal(r)
        };
        let n = gen.below(4);
        out.push(Task::Remark(i, j, g, n));
    }
    let mut rings = InstanceGen::new(suite.seed).nonradical();
    for _ in 0..suite.graded_family {
        out.push(Task::Graded(ring_instance(&mut rings), suite.graded_bound));
    }
    for _ in 0..suite.additivity {
        out.push(Task::Additivity(ring_instance(&mut rings), suite.additivity_nmax));
    }
    out
}

/// Runs every randomized check. Instances are generated sequentially from
/// the seed and checked in parallel; the report order follows generation.
pub fn run_property_suite(suite: &PropertySuite) -> Result<Vec<CheckReport>> {
    let reports: Vec<Result<Vec<CheckReport>>> = tasks(suite).par_iter().map(Task::run).collect();
    let mut out = Vec::new();
    for r in reports {
        out.extend(r?);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct InstanceParams {
    pub nmax: u32,
    pub mmax: u32,
    pub kmax: u32,
    pub tolerance: BigRational,
}

impl Default for InstanceParams {
    fn default() -> Self {
        InstanceParams {
            nmax: 8,
            mmax: 3,
            kmax: 6,
            tolerance: default_tolerance(),
        }
    }
}

/// Every check applicable to one ideal of one ring.
pub fn run_instance_suite(ideal: &RingIdeal, params: &InstanceParams) -> Result<Vec<CheckReport>> {
    let ring = ideal.ring();
    let extra = MonomialIdeal::minimalize(ring.arity(), ideal.extra_generators())?;
    let mut out = Vec::new();
    for n in 1..=params.nmax.min(4) {
        out.push(check_remark21(ring.nilradical_ambient(), &extra, ring.defining_ideal(), n)?);
    }
    let per_n: Vec<Result<[CheckReport; 2]>> = (1..=params.nmax)
        .into_par_iter()
        .map(|n| Ok([check_additivity_rmk2(ideal, n)?, check_additivity_eq2(ideal, n)?]))
        .collect();
    for pair in per_n {
        out.extend(pair?);
    }
    out.push(check_graded_family(ideal, params.nmax.min(8))?);
    let needed = ring.dimension() as u32 + 2;
    let instance = format!("{} I={}", ring.fingerprint(), ideal);
    for m in 1..=params.mmax {
        if params.kmax < needed {
            out.push(CheckReport::skipped(LEM7, &instance, format!("kmax below d + 2 = {needed}")));
        } else {
            out.push(check_lem7_consistency(ideal, m, params.kmax, &params.tolerance)?);
        }
    }
    if params.nmax < needed || params.kmax < needed {
        out.push(CheckReport::skipped(VM_THEOREM, instance, format!("nmax or kmax below d + 2 = {needed}")));
    } else if ring.hypothesis_holds() {
        let vm = check_vm_theorem(ideal, params.mmax, params.nmax, params.kmax, &params.tolerance)?;
        out.push(vm.report);
    } else {
        out.push(CheckReport::skipped(
            VM_THEOREM,
            instance,
            format!(
                "dim N = {} is not below dim R = {}",
                ring.nilradical_dimension_signed(),
                ring.dimension()
            ),
        ));
    }
    Ok(out)
}
