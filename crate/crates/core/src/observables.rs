//! Measured quantities as Pauli sums: Majorana operators and correlators,
//! fermion parity, particle number, and the Kitaev energy.
//!
//! Majorana index `m` is 1-based; `γ_{2k−1} = (Π_{j<k} Z_j) X_k` and
//! `γ_{2k} = −(Π_{j<k} Z_j) Y_k`, which is the qubit image of
//! `c†_k = (γ_{2k−1} + iγ_{2k})/2` under `c_k → (ΠZ)(X + iY)/2`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::compiler::ExcitationSet;
use crate::error::{Error, Result};
use crate::fermion::{kitaev_pauli, ChainSpec};
use crate::pauli::{PauliString, PauliSum};
use crate::simulator::{expectation, StateVector};

pub fn majorana_operator(m: usize, n: usize) -> Result<PauliSum> {
    if m == 0 || m > 2 * n {
        return Err(Error::IndexOutOfRange { index: m, bound: 2 * n + 1 });
    }
    let k = (m - 1) / 2;
    let tail = (1u64 << k) - 1;
    let bit = 1u64 << k;
    Ok(if m % 2 == 1 {
        PauliSum::from_string(n, PauliString { x: bit, z: tail }, 1.0)
    } else {
        PauliSum::from_string(n, PauliString { x: bit, z: tail | bit }, -1.0)
    })
}

/// `iγ₁γ_m` for `m ≥ 2`.
pub fn site_correlation_op(m: usize, n: usize) -> Result<PauliSum> {
    if m == 1 {
        return Err(Error::NonHermitianObservable("iγ₁γ₁ = i·𝟙 is not Hermitian".into()));
    }
    let g1 = majorana_operator(1, n)?;
    let gm = majorana_operator(m, n)?;
    Ok((&g1 * &gm).scale(Complex64::new(0.0, 1.0)))
}

/// Edge correlator `iγ₁γ₂ₙ`.
pub fn edge_correlation_op(n: usize) -> Result<PauliSum> {
    site_correlation_op(2 * n, n)
}

/// `Π_k (1 − 2c†_k c_k) = Z⊗…⊗Z`.
pub fn parity_op(n: usize) -> PauliSum {
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    PauliSum::from_string(n, PauliString { x: 0, z: all }, 1.0)
}

/// `Σ_k (1 − Z_k)/2`.
pub fn number_op(n: usize) -> PauliSum {
    let mut out = PauliSum::identity(n).scale(n as f64 / 2.0);
    for k in 0..n {
        out = out + PauliSum::from_string(n, PauliString { x: 0, z: 1 << k }, -0.5);
    }
    out
}

/// Prebuilt observables for chains of length `n`, shared across a sweep.
#[derive(Debug, Clone)]
pub struct ObservableSet {
    n: usize,
    parity: PauliSum,
    number: PauliSum,
    site: Vec<PauliSum>,
}

impl ObservableSet {
    pub fn new(n: usize) -> Self {
        let site = (2..=2 * n).map(|m| site_correlation_op(m, n).expect("m in range")).collect();
        Self { n, parity: parity_op(n), number: number_op(n), site }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parity(&self) -> &PauliSum {
        &self.parity
    }

    pub fn number(&self) -> &PauliSum {
        &self.number
    }

    pub fn edge(&self) -> &PauliSum {
        self.site.last().expect("n ≥ 1")
    }

    /// `iγ₁γ_m`, `m ∈ 2..=2n`.
    pub fn site(&self, m: usize) -> Result<&PauliSum> {
        if m < 2 {
            return Err(Error::NonHermitianObservable("site correlator needs m ≥ 2".into()));
        }
        self.site.get(m - 2).ok_or(Error::IndexOutOfRange { index: m, bound: 2 * self.n + 1 })
    }

    /// `⟨iγ₁γ_m⟩` for `m = 2..=2n`.
    pub fn site_profile(&self, psi: &StateVector) -> Result<Vec<f64>> {
        self.site.iter().map(|o| expectation(o, psi)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasurementRecord {
    pub mu: f64,
    pub label: ExcitationSet,
    pub energy: f64,
    pub parity: f64,
    pub number: f64,
    pub edge_corr: f64,
}

/// Energy, parity, particle number and edge correlation of `psi`.
pub fn measure_all(psi: &StateVector, spec: &ChainSpec, label: &ExcitationSet) -> Result<MeasurementRecord> {
    measure_with(psi, spec, label, &kitaev_pauli(spec), &ObservableSet::new(spec.n()))
}

pub(crate) fn measure_with(
    psi: &StateVector,
    spec: &ChainSpec,
    label: &ExcitationSet,
    hamiltonian: &PauliSum,
    obs: &ObservableSet,
) -> Result<MeasurementRecord> {
    Ok(MeasurementRecord {
        mu: spec.mu()[0],
        label: label.clone(),
        energy: expectation(hamiltonian, psi)?,
        parity: expectation(obs.parity(), psi)?,
        number: expectation(obs.number(), psi)?,
        edge_corr: expectation(obs.edge(), psi)?,
    })
}
