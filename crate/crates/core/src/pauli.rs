//! Pauli strings on up to 64 qubits and their weighted sums.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fermion::COEFF_EPS;

pub const MAX_QUBITS: usize = 64;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Tensor product of single-qubit Paulis in symplectic form. Bit `q` of `x`
/// and `z` encodes the factor on qubit `q`: (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PauliString {
    pub x: u64,
    pub z: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl PauliString {
    pub const IDENTITY: PauliString = PauliString { x: 0, z: 0 };

    pub fn single(q: usize, p: Pauli) -> Self {
        let b = 1u64 << q;
        match p {
            Pauli::I => Self::IDENTITY,
            Pauli::X => Self { x: b, z: 0 },
            Pauli::Y => Self { x: b, z: b },
            Pauli::Z => Self { x: 0, z: b },
        }
    }

    pub fn get(&self, q: usize) -> Pauli {
        match ((self.x >> q) & 1, (self.z >> q) & 1) {
            (0, 0) => Pauli::I,
            (1, 0) => Pauli::X,
            (1, 1) => Pauli::Y,
            _ => Pauli::Z,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    pub fn support(&self) -> u64 {
        self.x | self.z
    }

    pub fn y_count(&self) -> u32 {
        (self.x & self.z).count_ones()
    }

    /// `self * other = phase * result`.
    pub fn mul_phase(&self, other: &Self) -> (Complex64, Self) {
        let mut exp: i32 = 0;
        let mut bits = self.support() & other.support();
        while bits != 0 {
            let q = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            exp += match (self.get(q), other.get(q)) {
                (Pauli::X, Pauli::Y) | (Pauli::Y, Pauli::Z) | (Pauli::Z, Pauli::X) => 1,
                (Pauli::Y, Pauli::X) | (Pauli::Z, Pauli::Y) | (Pauli::X, Pauli::Z) => -1,
                _ => 0,
            };
        }
        let phase = match exp.rem_euclid(4) {
            0 => Complex64::new(1.0, 0.0),
            1 => I,
            2 => Complex64::new(-1.0, 0.0),
            _ => -I,
        };
        (phase, Self { x: self.x ^ other.x, z: self.z ^ other.z })
    }

    /// Action on a computational basis state: `P|b⟩ = phase · |b ⊕ x⟩`.
    #[inline]
    pub fn apply_to_basis(&self, b: usize, y_phase: Complex64) -> (Complex64, usize) {
        let sign = if ((b as u64) & self.z).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
        (y_phase * sign, b ^ self.x as usize)
    }

    /// `i^{#Y}`, the basis-independent part of [`apply_to_basis`](Self::apply_to_basis).
    pub fn y_phase(&self) -> Complex64 {
        I.powu(self.y_count())
    }

    pub fn to_label(&self, n: usize) -> String {
        (0..n)
            .map(|q| match self.get(q) {
                Pauli::I => 'I',
                Pauli::X => 'X',
                Pauli::Y => 'Y',
                Pauli::Z => 'Z',
            })
            .collect()
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Parses labels such as `"XIZ"`; character `q` acts on qubit `q`.
    fn from_str(s: &str) -> Result<Self> {
        if s.len() > MAX_QUBITS {
            return Err(Error::DimensionCap { n: s.len(), cap: MAX_QUBITS });
        }
        let mut out = Self::IDENTITY;
        for (q, ch) in s.chars().enumerate() {
            let p = match ch {
                'I' => Pauli::I,
                'X' => Pauli::X,
                'Y' => Pauli::Y,
                'Z' => Pauli::Z,
                _ => return Err(Error::Parse(format!("bad Pauli character {ch:?}"))),
            };
            let s = Self::single(q, p);
            out.x |= s.x;
            out.z |= s.z;
        }
        Ok(out)
    }
}

/// Weighted sum of Pauli strings on `n` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSum {
    n: usize,
    terms: BTreeMap<PauliString, Complex64>,
}

impl PauliSum {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_QUBITS, "at most {MAX_QUBITS} qubits supported");
        Self { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_string(n, PauliString::IDENTITY, 1.0)
    }

    pub fn from_string(n: usize, p: PauliString, c: impl Into<Complex64>) -> Self {
        let mut out = Self::zero(n);
        assert!(n == MAX_QUBITS || p.support() >> n == 0, "Pauli string exceeds {n} qubits");
        out.terms.insert(p, c.into());
        out.simplify();
        out
    }

    /// Builds a sum from `(label, coefficient)` pairs such as `("XZ", 0.5)`.
    pub fn from_labels<C: Into<Complex64> + Copy>(n: usize, terms: &[(&str, C)]) -> Result<Self> {
        let mut out = Self::zero(n);
        for (label, c) in terms {
            if label.len() != n {
                return Err(Error::Parse(format!("label {label:?} is not {n} characters")));
            }
            let p: PauliString = label.parse()?;
            *out.terms.entry(p).or_default() += (*c).into();
        }
        out.simplify();
        Ok(out)
    }

    pub fn single(n: usize, q: usize, p: Pauli) -> Self {
        Self::from_string(n, PauliString::single(q, p), 1.0)
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PauliString, &Complex64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &PauliString) -> Complex64 {
        self.terms.get(p).copied().unwrap_or_default()
    }

    pub fn scale(&self, s: impl Into<Complex64>) -> Self {
        let s = s.into();
        let mut out = self.clone();
        out.terms.values_mut().for_each(|c| *c *= s);
        out.simplify();
        out
    }

    /// Hermitian iff every coefficient is real (Pauli strings are Hermitian).
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.terms.values().all(|c| c.im.abs() <= tol)
    }

    pub fn max_abs_imag(&self) -> f64 {
        self.terms.values().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    /// Coefficients with imaginary parts removed.
    pub fn real_part(&self) -> Self {
        let mut out = self.clone();
        out.terms.values_mut().for_each(|c| c.im = 0.0);
        out.simplify();
        out
    }

    /// Largest coefficient difference against `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.clone() - other.clone()).terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    fn simplify(&mut self) {
        self.terms.retain(|_, c| c.norm() > COEFF_EPS);
    }

    /// Dense `2ⁿ × 2ⁿ` matrix in little-endian ordering (qubit 0 is the least
    /// significant bit of the basis index).
    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let dim = 1usize << self.n;
        let mut m = DMatrix::zeros(dim, dim);
        for (p, c) in &self.terms {
            let yp = p.y_phase() * c;
            for b in 0..dim {
                let (ph, row) = p.apply_to_basis(b, yp);
                m[(row, b)] += ph;
            }
        }
        m
    }

    /// `self |ψ⟩` for a dense amplitude vector.
    pub fn apply(&self, psi: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::default(); psi.len()];
        for (p, c) in &self.terms {
            let yp = p.y_phase() * c;
            for (b, a) in psi.iter().enumerate() {
                let (ph, row) = p.apply_to_basis(b, yp);
                out[row] += ph * a;
            }
        }
        out
    }
}

impl Add for PauliSum {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.n, rhs.n, "qubit count mismatch");
        for (k, v) in rhs.terms {
            *self.terms.entry(k).or_default() += v;
        }
        self.simplify();
        self
    }
}

impl Sub for PauliSum {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for PauliSum {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for &PauliSum {
    type Output = PauliSum;
    fn mul(self, rhs: Self) -> PauliSum {
        assert_eq!(self.n, rhs.n, "qubit count mismatch");
        let mut out = PauliSum::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let (ph, p) = a.mul_phase(b);
                *out.terms.entry(p).or_default() += ph * ca * cb;
            }
        }
        out.simplify();
        out
    }
}

impl Mul for PauliSum {
    type Output = PauliSum;
    fn mul(self, rhs: Self) -> PauliSum {
        &self * &rhs
    }
}

impl fmt::Display for PauliSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.im == 0.0 {
                write!(f, "{} {}", c.re, p.to_label(self.n))?;
            } else {
                write!(f, "({}{:+}i) {}", c.re, c.im, p.to_label(self.n))?;
            }
        }
        Ok(())
    }
}
