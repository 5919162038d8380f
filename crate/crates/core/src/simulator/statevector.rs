use num_complex::Complex64;

use crate::compiler::{ryxxy_matrix, Gate, GaussianCircuit};
use crate::error::{Error, Result};
use crate::pauli::{PauliSum, MAX_QUBITS};

/// Pure state on `n` qubits, little-endian: qubit `q` is bit `q` of the
/// basis index.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// `|0…0⟩`.
    pub fn zero(n: usize) -> Self {
        assert!(n < MAX_QUBITS, "too many qubits for a dense state");
        let mut amps = vec![Complex64::default(); 1 << n];
        amps[0] = Complex64::new(1.0, 0.0);
        Self { n, amps }
    }

    /// Validates length `2ⁿ` and unit norm to `1e−12`.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let dim = amps.len();
        if !dim.is_power_of_two() {
            return Err(Error::InvalidSpec(format!("state length {dim} is not a power of two")));
        }
        let s = Self { n: dim.trailing_zeros() as usize, amps };
        if (s.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidSpec(format!("state norm {} is not 1", s.norm())));
        }
        Ok(s)
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn apply_gate(&mut self, gate: &Gate) {
        match *gate {
            Gate::X { q } => {
                let bit = 1usize << q;
                for b in 0..self.amps.len() {
                    if b & bit == 0 {
                        self.amps.swap(b, b | bit);
                    }
                }
            }
            Gate::Rz { q, beta } => {
                let bit = 1usize << q;
                let lo = Complex64::from_polar(1.0, -beta / 2.0);
                let hi = Complex64::from_polar(1.0, beta / 2.0);
                for (b, a) in self.amps.iter_mut().enumerate() {
                    *a *= if b & bit == 0 { lo } else { hi };
                }
            }
            Gate::Ryxxy { q, alpha } => {
                let m = ryxxy_matrix(alpha);
                let (b0, b1) = (1usize << q, 1usize << (q + 1));
                for base in 0..self.amps.len() {
                    if base & (b0 | b1) != 0 {
                        continue;
                    }
                    // local index 2·bit_q + bit_{q+1}: qubit q is the first factor
                    let idx = [base, base | b1, base | b0, base | b0 | b1];
                    let v = idx.map(|i| self.amps[i]);
                    for (r, &i) in idx.iter().enumerate() {
                        self.amps[i] = (0..4).map(|c| m[(r, c)] * v[c]).sum();
                    }
                }
            }
        }
    }

    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }
}

/// `U_circuit |0…0⟩`.
pub fn apply_circuit(circuit: &GaussianCircuit) -> StateVector {
    let mut psi = StateVector::zero(circuit.n_qubits());
    for g in circuit.gates() {
        psi.apply_gate(g);
    }
    psi
}

pub(crate) fn check_hermitian(obs: &PauliSum) -> Result<()> {
    if obs.is_hermitian(1e-12) {
        Ok(())
    } else {
        Err(Error::NonHermitianObservable(format!("imaginary coefficient {:e}", obs.max_abs_imag())))
    }
}

/// `⟨ψ|O|ψ⟩` for Hermitian `O`.
pub fn expectation(obs: &PauliSum, psi: &StateVector) -> Result<f64> {
    check_hermitian(obs)?;
    if obs.n_qubits() != psi.n {
        return Err(Error::LengthMismatch(obs.n_qubits(), psi.n));
    }
    let mut total = Complex64::default();
    for (p, c) in obs.terms() {
        let yp = p.y_phase();
        let mut acc = Complex64::default();
        for (b, a) in psi.amps.iter().enumerate() {
            let (ph, row) = p.apply_to_basis(b, yp);
            acc += psi.amps[row].conj() * ph * a;
        }
        total += c.re * acc;
    }
    debug_assert!(total.im.abs() < 1e-10, "imaginary expectation {}", total.im);
    Ok(total.re)
}
