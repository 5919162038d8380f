use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::statevector::{check_hermitian, StateVector};
use crate::compiler::{Gate, GaussianCircuit};
use crate::error::{Error, Result};
use crate::pauli::PauliSum;

/// Mixed state `ρ` on `n` qubits in the computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n: usize,
    rho: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validates Hermiticity (`1e−12`), unit trace (`1e−12`) and
    /// eigenvalues `≥ −1e−10`.
    pub fn new(rho: DMatrix<Complex64>) -> Result<Self> {
        let dim = rho.nrows();
        if !rho.is_square() || !dim.is_power_of_two() {
            return Err(Error::InvalidSpec(format!("density matrix must be 2^n square, got {}x{}", dim, rho.ncols())));
        }
        let herm = (&rho - rho.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if herm > 1e-12 {
            return Err(Error::InvalidSpec(format!("density matrix not Hermitian ({herm:e})")));
        }
        let tr = rho.trace();
        if (tr.re - 1.0).abs() > 1e-12 || tr.im.abs() > 1e-12 {
            return Err(Error::InvalidSpec(format!("density matrix trace {tr}")));
        }
        let min = rho.clone().symmetric_eigenvalues().min();
        if min < -1e-10 {
            return Err(Error::InvalidSpec(format!("negative eigenvalue {min:e}")));
        }
        Ok(Self { n: dim.trailing_zeros() as usize, rho })
    }

    /// Maximally mixed state `𝟙/2ⁿ`.
    pub fn maximally_mixed(n: usize) -> Self {
        let dim = 1usize << n;
        Self { n, rho: DMatrix::identity(dim, dim) / Complex64::new(dim as f64, 0.0) }
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn rho(&self) -> &DMatrix<Complex64> {
        &self.rho
    }

    pub fn trace(&self) -> Complex64 {
        self.rho.trace()
    }

    pub fn purity(&self) -> f64 {
        self.rho.iter().map(|z| z.norm_sqr()).sum()
    }
}

/// `|ψ⟩⟨ψ|`.
pub fn to_density(psi: &StateVector) -> DensityMatrix {
    let a = psi.amplitudes();
    let dim = a.len();
    DensityMatrix { n: psi.n_qubits(), rho: DMatrix::from_fn(dim, dim, |i, j| a[i] * a[j].conj()) }
}

/// Pure-dephasing parameters. The effective dephasing time is
/// `t2_star + a·jitter_b` with `a` uniform on `[−1, 1]`, drawn once per
/// [`dephase`] call from `seed`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseModel {
    t2_star: f64,
    tau: f64,
    jitter_b: f64,
    seed: u64,
}

impl NoiseModel {
    pub fn new(t2_star: f64, tau: f64, jitter_b: f64, seed: u64) -> Result<Self> {
        if !(t2_star > 0.0 && t2_star.is_finite()) {
            return Err(Error::InvalidNoise(format!("t2_star must be positive and finite, got {t2_star}")));
        }
        if tau.is_nan() || tau < 0.0 {
            return Err(Error::InvalidNoise(format!("tau must be non-negative, got {tau}")));
        }
        if !(jitter_b >= 0.0 && jitter_b < t2_star / 2.0) {
            return Err(Error::InvalidNoise(format!("jitter_b must lie in [0, t2_star/2), got {jitter_b}")));
        }
        Ok(Self { t2_star, tau, jitter_b, seed })
    }

    pub fn t2_star(&self) -> f64 {
        self.t2_star
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn jitter_b(&self) -> f64 {
        self.jitter_b
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn with_tau(&self, tau: f64) -> Result<Self> {
        Self::new(self.t2_star, tau, self.jitter_b, self.seed)
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        Self { seed, ..*self }
    }

    /// Off-diagonal damping factor for one draw of the jitter.
    pub fn damping_factor(&self) -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let a: f64 = rng.random_range(-1.0..=1.0);
        let t_eff = self.t2_star + a * self.jitter_b;
        if self.tau == 0.0 {
            1.0
        } else {
            (-self.tau / t_eff).exp()
        }
    }
}

/// Per-gate durations for deriving a circuit duration `τ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateDurations {
    pub single_qubit: f64,
    pub two_qubit: f64,
}

impl GateDurations {
    /// Sum of gate durations (gates executed sequentially).
    pub fn circuit_duration(&self, circuit: &GaussianCircuit) -> f64 {
        circuit
            .gates()
            .iter()
            .map(|g| match g {
                Gate::Ryxxy { .. } => self.two_qubit,
                _ => self.single_qubit,
            })
            .sum()
    }
}

/// Pure dephasing in the computational basis: diagonal kept, off-diagonals
/// scaled by `exp(−τ/T₂_eff)`.
pub fn dephase(rho: &DensityMatrix, noise: &NoiseModel) -> DensityMatrix {
    let f = noise.damping_factor();
    let mut out = rho.rho.clone();
    let dim = out.nrows();
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                out[(i, j)] *= f;
            }
        }
    }
    DensityMatrix { n: rho.n, rho: out }
}

/// `Tr(ρ O)` for Hermitian `O`.
pub fn noisy_expectation(rho: &DensityMatrix, obs: &PauliSum) -> Result<f64> {
    check_hermitian(obs)?;
    if obs.n_qubits() != rho.n {
        return Err(Error::LengthMismatch(obs.n_qubits(), rho.n));
    }
    let dim = rho.rho.nrows();
    let mut total = Complex64::default();
    for (p, c) in obs.terms() {
        let yp = p.y_phase();
        let mut acc = Complex64::default();
        for b in 0..dim {
            let (ph, row) = p.apply_to_basis(b, yp);
            acc += rho.rho[(b, row)] * ph;
        }
        total += c.re * acc;
    }
    Ok(total.re)
}
