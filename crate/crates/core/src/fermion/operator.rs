use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::chain::ChainSpec;

/// Coefficients at or below this magnitude are dropped during simplification.
pub const COEFF_EPS: f64 = 1e-15;

/// A single creation (`dagger = true`) or annihilation operator on `site`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ladder {
    pub site: usize,
    pub dagger: bool,
}

impl Ladder {
    pub fn create(site: usize) -> Self {
        Self { site, dagger: true }
    }

    pub fn annihilate(site: usize) -> Self {
        Self { site, dagger: false }
    }

    fn canonical_before(self, other: Ladder) -> bool {
        match (self.dagger, other.dagger) {
            (true, false) => true,
            (false, true) => false,
            _ => self.site < other.site,
        }
    }
}

/// Polynomial in fermionic ladder operators kept in normal-ordered canonical
/// form: creators left of annihilators, sites ascending within each group.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FermionOperator {
    terms: BTreeMap<Vec<Ladder>, Complex64>,
}

impl FermionOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<Complex64>) -> Self {
        Self::term(&[], c)
    }

    /// `coeff * ops[0] * ops[1] * ...`, normal ordered.
    pub fn term(ops: &[Ladder], coeff: impl Into<Complex64>) -> Self {
        let mut out = Self::zero();
        out.add_product(ops.to_vec(), coeff.into());
        out.simplify();
        out
    }

    pub fn number(site: usize) -> Self {
        Self::term(&[Ladder::create(site), Ladder::annihilate(site)], 1.0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Ladder], Complex64)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), *v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, ops: &[Ladder]) -> Complex64 {
        self.terms.get(ops).copied().unwrap_or_default()
    }

    /// Largest site index referenced plus one.
    pub fn site_span(&self) -> usize {
        self.terms.keys().flat_map(|k| k.iter().map(|l| l.site + 1)).max().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Hermitian conjugate.
    pub fn conjugate(&self) -> Self {
        let mut out = Self::zero();
        for (ops, c) in &self.terms {
            let rev: Vec<Ladder> = ops.iter().rev().map(|l| Ladder { site: l.site, dagger: !l.dagger }).collect();
            out.add_product(rev, c.conj());
        }
        out.simplify();
        out
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        let diff = self.clone() - self.conjugate();
        diff.terms.values().all(|c| c.norm() <= tol)
    }

    pub fn scale(&self, s: impl Into<Complex64>) -> Self {
        let s = s.into();
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= s;
        }
        out.simplify();
        out
    }

    fn simplify(&mut self) {
        self.terms.retain(|_, c| c.norm() > COEFF_EPS);
    }

    /// Normal-order `coeff * ops` and accumulate into `self` (no cleanup).
    fn add_product(&mut self, ops: Vec<Ladder>, coeff: Complex64) {
        let mut stack = vec![(ops, coeff)];
        'products: while let Some((mut ops, c)) = stack.pop() {
            let mut sign = 1.0;
            let mut i = 0;
            while i + 1 < ops.len() {
                let (a, b) = (ops[i], ops[i + 1]);
                if a == b {
                    // c c = c† c† = 0
                    continue 'products;
                }
                if a.canonical_before(b) {
                    i += 1;
                    continue;
                }
                if !a.dagger && b.dagger && a.site == b.site {
                    // c c† = 1 − c† c
                    let mut contracted = ops.clone();
                    contracted.drain(i..i + 2);
                    stack.push((contracted, c * sign));
                }
                ops.swap(i, i + 1);
                sign = -sign;
                i = i.saturating_sub(1);
            }
            *self.terms.entry(ops).or_default() += c * sign;
        }
    }
}

impl Add for FermionOperator {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, v) in rhs.terms {
            *self.terms.entry(k).or_default() += v;
        }
        self.simplify();
        self
    }
}

impl Sub for FermionOperator {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for FermionOperator {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for &FermionOperator {
    type Output = FermionOperator;
    fn mul(self, rhs: Self) -> FermionOperator {
        let mut out = FermionOperator::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let mut ops = a.clone();
                ops.extend_from_slice(b);
                out.add_product(ops, ca * cb);
            }
        }
        out.simplify();
        out
    }
}

impl Mul for FermionOperator {
    type Output = FermionOperator;
    fn mul(self, rhs: Self) -> FermionOperator {
        &self * &rhs
    }
}

impl fmt::Display for FermionOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (ops, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({} {:+}i)", c.re, c.im)?;
            for l in ops {
                write!(f, " c{}{}", if l.dagger { "†" } else { "" }, l.site)?;
            }
        }
        Ok(())
    }
}

/// Kitaev chain Hamiltonian
/// `Σ μ_k c†_k c_k − Σ_k (t c†_k c_{k+1} − Δ c†_k c†_{k+1} + h.c.)`,
/// sites 0-based. Flipping the pairing order is the gauge `Δ → −Δ`.
pub fn build_kitaev(spec: &ChainSpec) -> FermionOperator {
    let mut h = FermionOperator::zero();
    for (k, &mu) in spec.mu().iter().enumerate() {
        h = h + FermionOperator::number(k).scale(mu);
    }
    for k in 0..spec.n().saturating_sub(1) {
        let (t, d) = (spec.t()[k], spec.delta()[k]);
        let (ck, ckp) = (Ladder::create(k), Ladder::create(k + 1));
        let akp = Ladder::annihilate(k + 1);
        let hop = FermionOperator::term(&[ck, akp], -t);
        let pair = FermionOperator::term(&[ck, ckp], d);
        let bond = hop + pair;
        h = h + bond.conjugate() + bond;
    }
    h
}
