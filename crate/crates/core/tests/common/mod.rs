//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;

use kitaev_gaussian::fermion::{ChainSpec, FermionOperator};

/// Applies a ladder operator to an occupation bitmask (bit `k` = site `k`),
/// returning the sign and the new state, or `None` if it annihilates.
fn apply_ladder(site: usize, dagger: bool, occ: usize) -> Option<(f64, usize)> {
    let occupied = occ >> site & 1 == 1;
    if occupied == dagger {
        return None;
    }
    let below = (occ & ((1 << site) - 1)).count_ones();
    let sign = if below.is_multiple_of(2) { 1.0 } else { -1.0 };
    Some((sign, occ ^ (1 << site)))
}

/// Dense matrix of a fermionic operator in the occupation-number basis.
pub fn fock_matrix(op: &FermionOperator, n: usize) -> DMatrix<Complex64> {
    let dim = 1usize << n;
    let mut m = DMatrix::zeros(dim, dim);
    for (ops, c) in op.terms() {
        for start in 0..dim {
            let mut state = Some((1.0, start));
            for l in ops.iter().rev() {
                state = state.and_then(|(s, occ)| apply_ladder(l.site, l.dagger, occ).map(|(s2, o)| (s * s2, o)));
            }
            if let Some((s, end)) = state {
                m[(end, start)] += c * s;
            }
        }
    }
    m
}

/// Kitaev chain matrix written directly from the chain parameters.
pub fn fock_kitaev(spec: &ChainSpec) -> DMatrix<Complex64> {
    let n = spec.n();
    let dim = 1usize << n;
    let mut m = DMatrix::<Complex64>::zeros(dim, dim);
    let mut add = |ops: &[(usize, bool)], coeff: f64| {
        for start in 0..dim {
            let mut state = Some((1.0, start));
            for &(site, dagger) in ops.iter().rev() {
                state = state.and_then(|(s, occ)| apply_ladder(site, dagger, occ).map(|(s2, o)| (s * s2, o)));
            }
            if let Some((s, end)) = state {
                m[(end, start)] += Complex64::new(coeff * s, 0.0);
            }
        }
    };
    for k in 0..n {
        add(&[(k, true), (k, false)], spec.mu()[k]);
    }
    for k in 0..n - 1 {
        let (t, d) = (spec.t()[k], spec.delta()[k]);
        add(&[(k, true), (k + 1, false)], -t);
        add(&[(k + 1, true), (k, false)], -t);
        add(&[(k, true), (k + 1, true)], d);
        add(&[(k + 1, false), (k, false)], d);
    }
    m
}

pub fn sorted_eigenvalues(m: &DMatrix<Complex64>) -> Vec<f64> {
    let mut v: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Small deterministic generator for parameter sampling in tests.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        lo + (hi - lo) * ((self.0 >> 11) as f64 / (1u64 << 53) as f64)
    }
}

/// `γ_m` (1-based) in the occupation basis: `γ_{2k−1} = c_k + c_k†`,
/// `γ_{2k} = i(c_k − c_k†)`.
pub fn fock_majorana(m: usize, n: usize) -> DMatrix<Complex64> {
    let k = (m - 1) / 2;
    let c = FermionOperator::term(&[kitaev_gaussian::fermion::Ladder::annihilate(k)], 1.0);
    let cd = FermionOperator::term(&[kitaev_gaussian::fermion::Ladder::create(k)], 1.0);
    let op = if m % 2 == 1 { c + cd } else { (c - cd).scale(Complex64::new(0.0, 1.0)) };
    fock_matrix(&op, n)
}

/// `⟨v|M|v⟩` for a normalized vector.
pub fn fock_expectation(m: &DMatrix<Complex64>, v: &[Complex64]) -> f64 {
    let v = nalgebra::DVector::from_column_slice(v);
    (v.adjoint() * m * &v)[(0, 0)].re
}
