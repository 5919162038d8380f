use nalgebra::DMatrix;
use num_complex::Complex64;

use super::schur::SchurForm;

/// Unitary `W` with `(b, b†)ᵀ = W (a, a†)ᵀ`, block form
/// `[[W₁*, W₂*], [W₂, W₁]]`, where `b_k` annihilates the quasiparticle of
/// energy `2ε_k`.
#[derive(Debug, Clone)]
pub struct BogoliubovW {
    pub w: DMatrix<Complex64>,
    pub omega: DMatrix<Complex64>,
}

/// `Ω = (1/√2) [[𝟙, 𝟙], [i𝟙, −i𝟙]]`, mapping `(a, a†)` to Majoranas
/// `(γ_odd, γ_even)/√2`.
pub fn omega(n: usize) -> DMatrix<Complex64> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        if i % n != j % n {
            return Complex64::default();
        }
        match (i < n, j < n) {
            (true, _) => Complex64::new(s, 0.0),
            (false, true) => Complex64::new(0.0, s),
            (false, false) => Complex64::new(0.0, -s),
        }
    })
}

impl BogoliubovW {
    pub fn n_modes(&self) -> usize {
        self.w.nrows() / 2
    }

    /// `W₁* = W[..n, ..n]`: coefficients of `a` in `b`.
    pub fn w11(&self) -> DMatrix<Complex64> {
        let n = self.n_modes();
        self.w.view((0, 0), (n, n)).into_owned()
    }

    /// `W₂* = W[..n, n..]`: coefficients of `a†` in `b`.
    pub fn w12(&self) -> DMatrix<Complex64> {
        let n = self.n_modes();
        self.w.view((0, n), (n, n)).into_owned()
    }

    /// Row block `W_L = [W₂*, W₁*]` describing `b_p = Σ W_L[p,q] a†_q + W_L[p,n+q] a_q`,
    /// the form consumed by the Givens decomposition.
    pub fn w_l(&self) -> DMatrix<Complex64> {
        let n = self.n_modes();
        let mut out = DMatrix::zeros(n, 2 * n);
        out.view_mut((0, 0), (n, n)).copy_from(&self.w12());
        out.view_mut((0, n), (n, n)).copy_from(&self.w11());
        out
    }

    pub fn unitarity_residual(&self) -> f64 {
        let d = self.w.nrows();
        (&self.w * self.w.adjoint() - DMatrix::<Complex64>::identity(d, d)).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// `W = Ω† R̂ Ω`, where `R̂` is the Schur rotation rewritten on block-ordered
/// Majoranas `(γ₁, γ₃, …, γ₂, γ₄, …)` with the `w` rows negated so that
/// `b_k = (γ'_k + iγ''_k)/2` and `iγ'_kγ''_k = 2b†_k b_k − 1`.
pub fn bogoliubov_w(schur: &SchurForm) -> BogoliubovW {
    let n = schur.n_modes();
    let r_hat = DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let col = if j < n { 2 * j } else { 2 * (j - n) + 1 };
        let sign = if i < n { 1.0 } else { -1.0 };
        Complex64::new(sign * schur.r[(i, col)], 0.0)
    });
    let om = omega(n);
    let full = om.adjoint() * r_hat * &om;
    let mut w = DMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..2 * n {
            let z = full[(i, j)];
            w[(i, j)] = z;
            w[(n + i, (j + n) % (2 * n))] = z.conj();
        }
    }
    BogoliubovW { w, omega: om }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_schur_gives_structured_unitary() {
        let n = 2;
        let schur = SchurForm { r: DMatrix::identity(2 * n, 2 * n), eps: vec![0.0; n] };
        let bw = bogoliubov_w(&schur);
        assert!(bw.unitarity_residual() < 1e-14);
        for i in 0..n {
            for j in 0..n {
                assert_eq!(bw.w[(n + i, n + j)], bw.w[(i, j)].conj());
                assert_eq!(bw.w[(n + i, j)], bw.w[(i, n + j)].conj());
            }
        }
    }

    #[test]
    fn occupation_frame_gives_diagonal_w() {
        // u_k = γ_{2k}, w_k = γ_{2k−1}: the Schur frame of Σ μ_k c†_k c_k, μ_k > 0
        let n = 3;
        let mut r = DMatrix::zeros(2 * n, 2 * n);
        for k in 0..n {
            r[(k, 2 * k + 1)] = 1.0;
            r[(n + k, 2 * k)] = 1.0;
        }
        let bw = bogoliubov_w(&SchurForm { r, eps: vec![1.0; n] });
        let i = Complex64::new(0.0, 1.0);
        let expect = DMatrix::from_fn(2 * n, 2 * n, |a, b| {
            if a != b {
                Complex64::default()
            } else if a < n {
                i
            } else {
                -i
            }
        });
        assert!((bw.w - expect).iter().all(|z| z.norm() < 1e-15));
    }

    #[test]
    fn omega_is_unitary() {
        let om = omega(3);
        let d = &om * om.adjoint() - DMatrix::<Complex64>::identity(6, 6);
        assert!(d.iter().all(|z| z.norm() < 1e-15));
    }
}
