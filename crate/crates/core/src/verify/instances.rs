//! Seeded random monomial ideals and quotient rings.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monomial::{Monomial, MonomialIdeal};
use crate::ring::QuotientRing;

#[derive(Debug, Clone)]
pub struct InstanceGen {
    rng: ChaCha8Rng,
    pub seed: u64,
    pub max_arity: usize,
    pub max_degree: u32,
    pub max_gens: usize,
    /// Rings get a nonradical defining ideal with `dim N < dim R`.
    pub nonradical_quotient: bool,
}

impl InstanceGen {
    pub fn new(seed: u64) -> Self {
        InstanceGen::with_bounds(seed, 4, 5, 5)
    }

    pub fn with_bounds(seed: u64, max_arity: usize, max_degree: u32, max_gens: usize) -> Self {
        assert!((1..=4).contains(&max_arity), "arity bound must be in 1..=4");
        assert!((1..=5).contains(&max_degree), "degree bound must be in 1..=5");
        assert!((1..=5).contains(&max_gens), "generator bound must be in 1..=5");
        InstanceGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
            max_arity,
            max_degree,
            max_gens,
            nonradical_quotient: false,
        }
    }

    pub fn nonradical(mut self) -> Self {
        self.nonradical_quotient = true;
        self
    }

    pub fn arity(&mut self) -> usize {
        let low = self.max_arity.min(2);
        self.rng.gen_range(low..=self.max_arity)
    }

    pub fn monomial_of_degree(&mut self, arity: usize, degree: u32) -> Monomial {
        let mut exps = vec![0u32; arity];
        for _ in 0..degree {
            exps[self.rng.gen_range(0..arity)] += 1;
        }
        Monomial::new(exps).expect("small exponents")
    }

    pub fn monomial(&mut self, arity: usize) -> Monomial {
        let degree = self.rng.gen_range(1..=self.max_degree);
        self.monomial_of_degree(arity, degree)
    }

    /// A nonzero proper ideal with a minimal generator divisible by `x_1`.
    pub fn ideal(&mut self, arity: usize) -> MonomialIdeal {
        loop {
            let ideal = self.candidate_ideal(arity);
            if ideal.generators().iter().any(|g| g.exponents()[0] > 0) {
                return ideal;
            }
        }
    }

    fn candidate_ideal(&mut self, arity: usize) -> MonomialIdeal {
        let count = self.rng.gen_range(1..=self.max_gens);
        let mut gens: Vec<Monomial> = (0..count).map(|_| self.monomial(arity)).collect();
        if gens[0].exponents()[0] == 0 {
            let mut exps = gens[0].exponents().to_vec();
            if gens[0].degree() >= self.max_degree {
                let drop = exps.iter().position(|&e| e > 0).expect("positive degree");
                exps[drop] -= 1;
            }
            exps[0] += 1;
            gens[0] = Monomial::new(exps).expect("small exponents");
        }
        MonomialIdeal::minimalize(arity, gens).expect("uniform arity")
    }

    /// `(z^a, z*w : w ∈ W)` with `z` the last variable and `W` a nonempty set
    /// of other variables, so `N = (z)` and `dim N < dim R`.
    pub fn nonradical_quotient_ideal(&mut self, arity: usize) -> MonomialIdeal {
        assert!(arity >= 2, "a nonradical quotient with dim N < dim R needs two variables");
        let z = arity - 1;
        let a = self.rng.gen_range(2..=3.min(self.max_degree.max(2)));
        let mut others: Vec<usize> = (0..z).collect();
        others.shuffle(&mut self.rng);
        let take = self.rng.gen_range(1..=others.len());
        let mut gens = vec![power_of_variable(arity, z, a)];
        for &w in &others[..take] {
            let mut exps = vec![0; arity];
            exps[z] = 1;
            exps[w] = 1;
            gens.push(Monomial::new(exps).expect("small exponents"));
        }
        MonomialIdeal::minimalize(arity, gens).expect("uniform arity")
    }

    pub fn ring(&mut self) -> Arc<QuotientRing> {
        let arity = if self.nonradical_quotient {
            self.arity().max(2)
        } else {
            self.arity()
        };
        let names = default_names(arity);
        let defining = if self.nonradical_quotient {
            self.nonradical_quotient_ideal(arity)
        } else {
            MonomialIdeal::zero(arity)
        };
        let ring = QuotientRing::new(names, defining).expect("generated quotient is proper");
        debug_assert!(ring.hypothesis_holds());
        Arc::new(ring)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn below(&mut self, bound: u32) -> u32 {
        self.rng.gen_range(1..=bound)
    }
}

fn power_of_variable(arity: usize, index: usize, exponent: u32) -> Monomial {
    let mut exps = vec![0; arity];
    exps[index] = exponent;
    Monomial::new(exps).expect("small exponents")
}

/// `x, y, z, w` for small arities, `x1..xr` otherwise.
pub fn default_names(arity: usize) -> Vec<String> {
    const SHORT: [&str; 4] = ["x", "y", "z", "w"];
    if arity <= SHORT.len() {
        SHORT[..arity].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=arity).map(|i| format!("x{i}")).collect()
    }
}
