//! Monomials and monomial ideals of a fixed ambient polynomial ring `k[x_1..x_r]`.
//!
//! A [`MonomialIdeal`] always stores its minimal generating set (the
//! divisibility antichain) in canonical order: ascending total degree, and
//! lexicographically largest first within a degree (`x_1 > x_2 > ...`). Two
//! ideals are equal exactly when their generator lists are identical.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest arity accepted by [`MonomialIdeal::dimension`]; the vertex-cover
/// search is exhaustive over subsets of variables.
pub const MAX_DIMENSION_ARITY: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps, degree })
    }

    /// The identity monomial `1`.
    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: vec![0; arity],
            degree: 0,
        }
    }

    pub fn variable(arity: usize, index: usize) -> Result<Self> {
        if index >= arity {
            return Err(Error::VariableIndex { index, arity });
        }
        let mut exps = vec![0; arity];
        exps[index] = 1;
        Ok(Monomial { exps, degree: 1 })
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::ExponentOverflow)?;
        Monomial::new(exps)
    }

    /// Multiplies by a single variable.
    pub fn times_variable(&self, index: usize) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        exps[index] = exps[index].checked_add(1).ok_or(Error::ExponentOverflow)?;
        let degree = self.degree.checked_add(1).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps, degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Componentwise `max(a - b, 0)`: the generator of `(self) : (other)`.
    pub fn quotient_part(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.saturating_sub(*b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// The squarefree monomial with the same support.
    pub fn support_monomial(&self) -> Monomial {
        let exps: Vec<u32> = self.exps.iter().map(|&e| u32::from(e > 0)).collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// Bit `i` is set when `x_i` divides the monomial.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |mask, (i, _)| mask | (1 << i))
    }

    fn without_variable(&self, index: usize) -> Monomial {
        let mut exps = self.exps.clone();
        let removed = std::mem::take(&mut exps[index]);
        Monomial {
            exps,
            degree: self.degree - removed,
        }
    }

    /// Canonical text such as `x^2*y`, or `1`.
    pub fn display_with<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> impl fmt::Display + 'a {
        MonomialDisplay {
            monomial: self,
            names,
        }
    }
}

/// Graded order: lower degree first, then lexicographically larger first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct MonomialDisplay<'a, S> {
    monomial: &'a Monomial,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for MonomialDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.monomial.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.names.get(i) {
                Some(name) => f.write_str(name.as_ref())?,
                None => write!(f, "x{}", i + 1)?,
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: [&str; 0] = [];
        let shown = self.display_with(&names).fmt(f);
        shown
    }
}

/// All monomials of total degree `degree` in `arity` variables, in
/// canonical order.
pub fn monomials_of_degree(arity: usize, degree: u32) -> Vec<Monomial> {
    fn fill(exps: &mut Vec<u32>, slot: usize, remaining: u32, out: &mut Vec<Monomial>, total: u32) {
        if slot + 1 == exps.len() {
            exps[slot] = remaining;
            out.push(Monomial {
                exps: exps.clone(),
                degree: total,
            });
            return;
        }
        for e in (0..=remaining).rev() {
            exps[slot] = e;
            fill(exps, slot + 1, remaining - e, out, total);
        }
    }
    if arity == 0 {
        return if degree == 0 { vec![Monomial::one(0)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    fill(&mut vec![0; arity], 0, degree, &mut out, degree);
    out
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    arity: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(arity: usize) -> Self {
        MonomialIdeal {
            arity,
            gens: Vec::new(),
        }
    }

    pub fn unit(arity: usize) -> Self {
        MonomialIdeal {
            arity,
            gens: vec![Monomial::one(arity)],
        }
    }

    /// The ideal `m = (x_1, ..., x_r)` of all variables.
    pub fn maximal(arity: usize) -> Self {
        let gens = (0..arity)
            .map(|i| Monomial::variable(arity, i).expect("index in range"))
            .collect();
        MonomialIdeal { arity, gens }
    }

    /// `m^degree`, generated by every monomial of that degree.
    pub fn maximal_power(arity: usize, degree: u32) -> Self {
        MonomialIdeal {
            arity,
            gens: monomials_of_degree(arity, degree),
        }
    }

    /// Builds the ideal generated by `gens`, reducing to the minimal
    /// generating antichain.
    pub fn minimalize<I>(arity: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = all.iter().find(|g| g.arity() != arity) {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: bad.arity(),
            });
        }
        all.sort_unstable();
        all.dedup();
        Ok(MonomialIdeal {
            arity,
            gens: reduce_sorted(all),
        })
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            arity: m.arity(),
            gens: vec![m],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    fn check_arity(&self, other: &MonomialIdeal) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        Ok(())
    }

    pub fn member(&self, u: &Monomial) -> Result<bool> {
        if u.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: u.arity(),
            });
        }
        Ok(self.contains_monomial(u))
    }

    /// Membership without the arity check.
    pub(crate) fn contains_monomial(&self, u: &Monomial) -> bool {
        self.gens
            .iter()
            .take_while(|g| g.degree() <= u.degree())
            .any(|g| g.divides(u))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_arity(other)?;
        Ok(other.gens.iter().all(|g| self.contains_monomial(g)))
    }

    /// A generator of `other` lying outside `self`, if any.
    pub fn first_missing(&self, other: &MonomialIdeal) -> Option<Monomial> {
        other
            .gens
            .iter()
            .find(|g| !self.contains_monomial(g))
            .cloned()
    }

    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut all: Vec<Monomial> = self.gens.iter().chain(&other.gens).cloned().collect();
        all.sort_unstable();
        all.dedup();
        Ok(MonomialIdeal {
            arity: self.arity,
            gens: reduce_sorted(all),
        })
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other)?;
        let mut products = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                products.push(a.checked_mul(b)?);
            }
        }
        MonomialIdeal::minimalize(self.arity, products)
    }

    /// `self^n`, with `self^0` the unit ideal.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.arity);
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b)?);
            }
        }
        MonomialIdeal::minimalize(self.arity, lcms)
    }

    /// `self : (u)`.
    pub fn colon_monomial(&self, u: &Monomial) -> Result<MonomialIdeal> {
        if u.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: u.arity(),
            });
        }
        MonomialIdeal::minimalize(self.arity, self.gens.iter().map(|a| a.quotient_part(u)))
    }

    /// `self : other = ∩_{g} self : g`. Colon by the zero ideal is the unit ideal.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other)?;
        let mut acc = MonomialIdeal::unit(self.arity);
        for g in &other.gens {
            let part = self.colon_monomial(g)?;
            acc = acc.intersect(&part)?;
        }
        Ok(acc)
    }

    /// `self : x_index^∞`.
    pub fn saturate_var(&self, index: usize) -> Result<MonomialIdeal> {
        if index >= self.arity {
            return Err(Error::VariableIndex {
                index,
                arity: self.arity,
            });
        }
        MonomialIdeal::minimalize(
            self.arity,
            self.gens.iter().map(|g| g.without_variable(index)),
        )
    }

    /// `self : m^∞` by iterating `J <- J : m` to a fixpoint. Also returns the
    /// smallest `t` with `self : m^t` equal to the saturation.
    pub fn saturate_max(&self) -> (MonomialIdeal, u32) {
        let maximal = MonomialIdeal::maximal(self.arity);
        let mut current = self.clone();
        let mut t = 0;
        loop {
            let next = current.colon(&maximal).expect("same arity");
            if next == current {
                return (current, t);
            }
            current = next;
            t += 1;
        }
    }

    pub fn saturation(&self) -> MonomialIdeal {
        self.saturate_max().0
    }

    /// `∩_i self : x_i^∞`, the variable-wise route to the same saturation.
    pub fn saturate_by_variables(&self) -> MonomialIdeal {
        (0..self.arity).fold(MonomialIdeal::unit(self.arity), |acc, i| {
            let part = self.saturate_var(i).expect("index in range");
            acc.intersect(&part).expect("same arity")
        })
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.arity, self.gens.iter().map(Monomial::support_monomial))
            .expect("same arity")
    }

    /// Krull dimension of `S / self`: arity minus the smallest set of
    /// variables meeting every generator support.
    pub fn dimension(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdealDimension);
        }
        if self.arity > MAX_DIMENSION_ARITY {
            return Err(Error::ArityTooLarge {
                arity: self.arity,
                max: MAX_DIMENSION_ARITY,
            });
        }
        let supports: Vec<u64> = self.radical().gens.iter().map(Monomial::support_mask).collect();
        let best = (0u64..1 << self.arity)
            .filter(|cover| supports.iter().all(|s| s & cover != 0))
            .map(|cover| cover.count_ones() as usize)
            .min()
            .expect("the full variable set covers every nonconstant support");
        Ok(self.arity - best)
    }

    pub fn display_with<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> impl fmt::Display + 'a {
        IdealDisplay { ideal: self, names }
    }
}

struct IdealDisplay<'a, S> {
    ideal: &'a MonomialIdeal,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for IdealDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ideal.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.ideal.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display_with(self.names))?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: [&str; 0] = [];
        let shown = self.display_with(&names).fmt(f);
        shown
    }
}

/// Drops every element divisible by an earlier one. Input must be sorted by
/// ascending degree and deduplicated.
fn reduce_sorted(sorted: Vec<Monomial>) -> Vec<Monomial> {
    let mut kept: Vec<Monomial> = Vec::new();
    for g in sorted {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(arity: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(arity, gens.iter().map(|g| m(g))).unwrap()
    }

    /// Minimal elements of `{u : deg u <= bound, pred(u)}`, the brute-force
    /// picture of an ideal's generators below `bound`.
    fn brute_generators(arity: usize, bound: u32, pred: impl Fn(&Monomial) -> bool) -> Vec<Monomial> {
        let members: Vec<Monomial> = (0..=bound)
            .flat_map(|d| monomials_of_degree(arity, d))
            .filter(|u| pred(u))
            .collect();
        let mut out: Vec<Monomial> = members
            .iter()
            .filter(|u| !members.iter().any(|v| v != *u && v.divides(u)))
            .cloned()
            .collect();
        out.sort();
        out
    }

    #[test]
    fn minimalize_examples() {
        let i = ideal(2, &[&[2, 0], &[3, 0], &[1, 1]]);
        assert_eq!(i.generators(), &[m(&[2, 0]), m(&[1, 1])]);
        assert!(ideal(2, &[]).is_zero());
        let u = ideal(2, &[&[0, 0], &[1, 0]]);
        assert!(u.is_unit());
        assert_eq!(u.generators().len(), 1);
    }

    #[test]
    fn minimalize_rejects_mixed_arity() {
        let err = MonomialIdeal::minimalize(2, vec![m(&[1, 0]), m(&[1, 0, 0])]).unwrap_err();
        assert_eq!(err, Error::ArityMismatch { expected: 2, found: 3 });
    }

    #[test]
    fn add_examples() {
        let x2 = ideal(2, &[&[2, 0]]);
        let xy = ideal(2, &[&[1, 1]]);
        assert_eq!(x2.add(&xy).unwrap(), ideal(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(x2.add(&MonomialIdeal::zero(2)).unwrap(), x2);
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.add(&y).unwrap(), MonomialIdeal::maximal(2));
        assert!(x.add(&ideal(3, &[&[1, 0, 0]])).is_err());
    }

    #[test]
    fn multiply_and_power_examples() {
        let mx = MonomialIdeal::maximal(2);
        assert_eq!(mx.power(2).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert!(mx.power(0).unwrap().is_unit());
        // products x^4, x^3y, x^3y, x^2y^2; all degree 4 so none divides another
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.power(2).unwrap(), ideal(2, &[&[4, 0], &[3, 1], &[2, 2]]));
    }

    #[test]
    fn multiply_reports_overflow() {
        let big = ideal(1, &[&[u32::MAX]]);
        assert_eq!(big.multiply(&big).unwrap_err(), Error::ExponentOverflow);
    }

    #[test]
    fn intersect_examples() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), ideal(2, &[&[1, 1]]));
        assert_eq!(x.intersect(&x).unwrap(), x);

        let a = ideal(2, &[&[2, 0], &[0, 1]]);
        let expected = brute_generators(2, 3, |u| a.contains_monomial(u) && x.contains_monomial(u));
        let got = a.intersect(&x).unwrap();
        assert_eq!(got.generators(), expected.as_slice());
        assert_eq!(got, ideal(2, &[&[2, 0], &[1, 1]]));
    }

    #[test]
    fn colon_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let x = ideal(2, &[&[1, 0]]);
        let expected = brute_generators(2, 3, |u| i.contains_monomial(&u.checked_mul(&m(&[1, 0])).unwrap()));
        let got = i.colon(&x).unwrap();
        assert_eq!(got.generators(), expected.as_slice());
        assert_eq!(got, MonomialIdeal::maximal(2));

        assert_eq!(i.colon(&MonomialIdeal::unit(2)).unwrap(), i);

        let y = ideal(2, &[&[0, 1]]);
        let expected = brute_generators(2, 3, |u| x.contains_monomial(&u.checked_mul(&m(&[0, 1])).unwrap()));
        assert_eq!(x.colon(&y).unwrap().generators(), expected.as_slice());
        assert_eq!(x.colon(&y).unwrap(), x);
    }

    #[test]
    fn colon_by_zero_is_unit() {
        let i = ideal(2, &[&[2, 0]]);
        assert!(i.colon(&MonomialIdeal::zero(2)).unwrap().is_unit());
    }

    #[test]
    fn saturate_var_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(i.saturate_var(0).unwrap().is_unit());
        assert_eq!(i.saturate_var(1).unwrap(), ideal(2, &[&[1, 0]]));
        let xy = ideal(2, &[&[1, 1]]);
        assert_eq!(xy.saturate_var(0).unwrap(), ideal(2, &[&[0, 1]]));
        assert_eq!(
            xy.saturate_var(2).unwrap_err(),
            Error::VariableIndex { index: 2, arity: 2 }
        );
    }

    #[test]
    fn saturate_max_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let (sat, t) = i.saturate_max();
        assert_eq!(sat, ideal(2, &[&[1, 0]]));
        assert_eq!(t, 1);
        assert_eq!(i.saturate_by_variables(), sat);

        let (sat, t) = MonomialIdeal::maximal(2).power(2).unwrap().saturate_max();
        assert!(sat.is_unit());
        assert!(t >= 1);

        let xy = ideal(2, &[&[1, 1]]);
        let (sat, t) = xy.saturate_max();
        assert_eq!((sat.clone(), t), (xy.clone(), 0));
        assert_eq!(xy.saturate_by_variables(), sat);
    }

    #[test]
    fn radical_examples() {
        // variables ordered x, y, z
        let i = ideal(3, &[&[0, 0, 2], &[0, 1, 1]]);
        assert_eq!(i.radical(), ideal(3, &[&[0, 0, 1]]));
        let x = ideal(2, &[&[1, 0]]);
        assert_eq!(x.radical(), x);
        assert_eq!(ideal(2, &[&[2, 3]]).radical(), ideal(2, &[&[1, 1]]));
    }

    #[test]
    fn dimension_examples() {
        let i = ideal(3, &[&[0, 0, 2], &[0, 1, 1]]);
        assert_eq!(i.dimension().unwrap(), 2);
        assert_eq!(MonomialIdeal::zero(4).dimension().unwrap(), 4);
        assert_eq!(MonomialIdeal::maximal(2).dimension().unwrap(), 0);
        assert_eq!(MonomialIdeal::unit(2).dimension().unwrap_err(), Error::UnitIdealDimension);
        assert!(matches!(
            MonomialIdeal::zero(13).dimension(),
            Err(Error::ArityTooLarge { .. })
        ));
    }

    #[test]
    fn containment_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(i.member(&m(&[2, 1])).unwrap());
        let x = ideal(2, &[&[1, 0]]);
        assert!(x.contains(&i).unwrap());
        assert!(!i.contains(&x).unwrap());
        assert!(i.member(&m(&[1])).is_err());
    }

    #[test]
    fn display_is_canonical() {
        let i = ideal(2, &[&[1, 1], &[2, 0], &[0, 3]]);
        assert_eq!(i.display_with(&["x", "y"]).to_string(), "(x^2, x*y, y^3)");
        assert_eq!(MonomialIdeal::zero(2).to_string(), "(0)");
        assert_eq!(MonomialIdeal::unit(2).to_string(), "(1)");
        assert_eq!(m(&[0, 2, 1]).to_string(), "x2^2*x3");
    }

    #[test]
    fn degree_enumeration_counts() {
        // C(e + r - 1, r - 1)
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(1, 7).len(), 1);
        assert_eq!(monomials_of_degree(4, 0), vec![Monomial::one(4)]);
    }
}
