use nalgebra::DMatrix;
use num_complex::Complex64;

use super::chain::ChainSpec;
use super::operator::{build_kitaev, FermionOperator, Ladder};
use crate::error::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `H = (i/2) γᵀ A γ + c0` with real antisymmetric `A` over the Majorana
/// vector `γ = (γ₁, γ₂, …, γ₂ₙ)` (0-based index `2k` is `γ_{2k+1}`).
///
/// Convention: `c†_k = (γ_{2k−1} + iγ_{2k})/2`, `c_k = (γ_{2k−1} − iγ_{2k})/2`
/// with sites 1-based, so `iγ_{2k−1}γ_{2k} = 1 − 2c†_k c_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct MajoranaQuadratic {
    a: DMatrix<f64>,
    c0: f64,
}

impl MajoranaQuadratic {
    /// Validates antisymmetry to `1e−12` and stores the exactly antisymmetrized matrix.
    pub fn new(a: DMatrix<f64>, c0: f64) -> Result<Self> {
        if !a.is_square() || !a.nrows().is_multiple_of(2) {
            return Err(Error::InvalidSpec(format!("Majorana matrix must be square with even size, got {}x{}", a.nrows(), a.ncols())));
        }
        if !c0.is_finite() || a.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidSpec("non-finite Majorana coefficients".into()));
        }
        let asym = (&a + a.transpose()).amax();
        if asym >= 1e-12 {
            return Err(Error::NotAntisymmetric(asym));
        }
        let a = (&a - a.transpose()) * 0.5;
        Ok(Self { a, c0 })
    }

    pub fn from_spec(spec: &ChainSpec) -> Self {
        majorana_quadratic_sized(&build_kitaev(spec), spec.n()).expect("Kitaev Hamiltonian is quadratic and Hermitian")
    }

    pub fn a(&self) -> &DMatrix<f64> {
        &self.a
    }

    pub fn c0(&self) -> f64 {
        self.c0
    }

    pub fn n_sites(&self) -> usize {
        self.a.nrows() / 2
    }

    /// Re-expands `(i/2) γᵀAγ + c0` in ladder operators.
    pub fn to_fermion_operator(&self) -> FermionOperator {
        let n = self.n_sites();
        let gammas: Vec<FermionOperator> = (0..2 * n).map(majorana_ladder).collect();
        let mut out = FermionOperator::constant(self.c0);
        for p in 0..2 * n {
            for q in 0..2 * n {
                let apq = self.a[(p, q)];
                if apq != 0.0 {
                    out = out + (&gammas[p] * &gammas[q]).scale(I * 0.5 * apq);
                }
            }
        }
        out
    }
}

/// `γ_{2k+1} = c_k + c†_k`, `γ_{2k+2} = i(c_k − c†_k)` for 0-based index `p`.
fn majorana_ladder(p: usize) -> FermionOperator {
    let k = p / 2;
    let c = FermionOperator::term(&[Ladder::annihilate(k)], 1.0);
    let cd = FermionOperator::term(&[Ladder::create(k)], 1.0);
    if p.is_multiple_of(2) {
        c + cd
    } else {
        (c - cd).scale(I)
    }
}

/// Coefficients of a ladder operator over the Majorana basis.
fn ladder_in_majoranas(l: Ladder) -> [(usize, Complex64); 2] {
    let odd = 2 * l.site;
    let even = odd + 1;
    let s = if l.dagger { 0.5 } else { -0.5 };
    [(odd, Complex64::new(0.5, 0.0)), (even, I * s)]
}

/// Majorana form of a quadratic Hermitian fermionic operator, sized to the
/// highest site it touches.
pub fn majorana_quadratic(op: &FermionOperator) -> Result<MajoranaQuadratic> {
    majorana_quadratic_sized(op, op.site_span().max(1))
}

/// As [`majorana_quadratic`] on an explicit number of sites `n`.
pub fn majorana_quadratic_sized(op: &FermionOperator, n: usize) -> Result<MajoranaQuadratic> {
    let span = op.site_span();
    if span > n {
        return Err(Error::IndexOutOfRange { index: span - 1, bound: n });
    }
    let dim = 2 * n;
    let mut m = DMatrix::<Complex64>::zeros(dim, dim);
    let mut c0 = Complex64::default();
    for (ops, c) in op.terms() {
        match ops.len() {
            0 => c0 += c,
            2 => {
                for (p, u) in ladder_in_majoranas(ops[0]) {
                    for (q, v) in ladder_in_majoranas(ops[1]) {
                        if p == q {
                            c0 += c * u * v;
                        } else {
                            m[(p, q)] += c * u * v;
                        }
                    }
                }
            }
            d => return Err(Error::NonQuadratic { degree: d }),
        }
    }
    // Σ_{p≠q} M_pq γ_p γ_q = (i/2) Σ A_pq γ_p γ_q with A = −i(M − Mᵀ)
    let a_c = (&m - m.transpose()) * (-I);
    let scale = a_c.iter().map(|x| x.norm()).fold(c0.norm(), f64::max).max(1.0);
    let imag = a_c.iter().map(|x| x.im.abs()).fold(c0.im.abs(), f64::max);
    if imag > 1e-12 * scale {
        return Err(Error::NonHermitian(format!("imaginary Majorana coefficient {imag:e}")));
    }
    MajoranaQuadratic::new(a_c.map(|x| x.re), c0.re)
}
