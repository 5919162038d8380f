use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::grid::MuGrid;
use crate::compiler::{CompileOptions, ExcitationSet, GaussianModel};
use crate::error::{Error, Result};
use crate::fermion::{kitaev_pauli, ChainSpec};
use crate::observables::{measure_with, ObservableSet};
use crate::pauli::PauliSum;
use crate::simulator::{apply_circuit, dephase, expectation, noisy_expectation, sample_expectation, to_density, NoiseModel, StateVector};
use crate::topology::bdg_excitation_energies;

/// Energy, parity, particle number and edge correlation of one state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObservableValues {
    pub energy: f64,
    pub parity: f64,
    pub number: f64,
    pub edge_corr: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub stderr: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampledValues {
    pub energy: Estimate,
    pub parity: Estimate,
    pub number: Estimate,
    pub edge_corr: Estimate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub mu: f64,
    pub label: ExcitationSet,
    pub values: Option<ObservableValues>,
    /// `⟨iγ₁γ_m⟩` for `m = 2..=2n`.
    pub site_corr: Vec<f64>,
    pub noisy: Option<ObservableValues>,
    pub sampled: Option<SampledValues>,
    /// Set when compilation failed at this point; the other fields are empty.
    pub error: Option<String>,
}

impl SweepRow {
    fn failed(mu: f64, label: ExcitationSet, err: &Error) -> Self {
        Self { mu, label, values: None, site_corr: Vec::new(), noisy: None, sampled: None, error: Some(err.to_string()) }
    }

    pub fn energy(&self) -> Option<f64> {
        self.values.map(|v| v.energy)
    }

    pub fn edge_corr(&self) -> Option<f64> {
        self.values.map(|v| v.edge_corr)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepMeta {
    pub spec: ChainSpec,
    pub grid: MuGrid,
    pub labels: Vec<ExcitationSet>,
    pub noise: Option<NoiseModel>,
    pub shots: Option<u64>,
    pub seed: u64,
    pub version: String,
}

/// Rows ordered by grid point, then by label in the order requested.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub meta: SweepMeta,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn rows_for<'a>(&'a self, label: &'a ExcitationSet) -> impl Iterator<Item = &'a SweepRow> + 'a {
        self.rows.iter().filter(move |r| &r.label == label)
    }

    pub fn failed_rows(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| r.error.is_some())
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    pub noise: Option<NoiseModel>,
    pub shots: Option<u64>,
    pub seed: u64,
    pub compile: CompileOptions,
}

pub(crate) fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed for grid point `point` and label `label`, independent of scheduling.
pub(crate) fn row_seed(seed: u64, point: usize, label: usize) -> u64 {
    splitmix64(splitmix64(seed ^ splitmix64(point as u64)) ^ label as u64)
}

fn check_labels(labels: &[ExcitationSet], n: usize) -> Result<()> {
    labels.iter().try_for_each(|l| l.check_bound(n))
}

/// Compiles, simulates and measures every label at every grid point.
pub fn sweep_spectrum(template: &ChainSpec, grid: &MuGrid, labels: &[ExcitationSet], noise: Option<&NoiseModel>) -> Result<SweepResult> {
    let opts = SweepOptions { noise: noise.copied(), seed: noise.map_or(0, |m| m.seed()), ..Default::default() };
    sweep_spectrum_with(template, grid, labels, &opts)
}

pub fn sweep_spectrum_with(template: &ChainSpec, grid: &MuGrid, labels: &[ExcitationSet], opts: &SweepOptions) -> Result<SweepResult> {
    grid.require_sweep_range()?;
    check_labels(labels, template.n())?;
    if opts.shots == Some(0) {
        return Err(Error::InvalidConfig("shots must be at least 1".into()));
    }
    let obs = ObservableSet::new(template.n());
    let per_point: Vec<Vec<SweepRow>> =
        grid.values().par_iter().enumerate().map(|(i, &mu)| sweep_point(template, mu, i, labels, &obs, opts)).collect::<Result<_>>()?;
    Ok(SweepResult {
        meta: SweepMeta {
            spec: template.clone(),
            grid: grid.clone(),
            labels: labels.to_vec(),
            noise: opts.noise,
            shots: opts.shots,
            seed: opts.seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        rows: per_point.into_iter().flatten().collect(),
    })
}

fn sweep_point(
    template: &ChainSpec,
    mu: f64,
    point: usize,
    labels: &[ExcitationSet],
    obs: &ObservableSet,
    opts: &SweepOptions,
) -> Result<Vec<SweepRow>> {
    let spec = template.with_uniform_mu(mu)?;
    let model = match GaussianModel::from_spec(&spec, opts.compile) {
        Ok(m) => m,
        Err(e @ Error::DegenerateHamiltonian { .. }) => {
            return Ok(labels.iter().map(|l| SweepRow::failed(mu, l.clone(), &e)).collect());
        }
        Err(e) => return Err(e),
    };
    let h = kitaev_pauli(&spec);
    labels
        .iter()
        .enumerate()
        .map(|(j, label)| {
            let psi = apply_circuit(&model.circuit(label)?);
            let seed = row_seed(opts.seed, point, j);
            measure_row(&psi, &spec, label, &h, obs, opts, seed)
        })
        .collect()
}

fn measure_row(
    psi: &StateVector,
    spec: &ChainSpec,
    label: &ExcitationSet,
    h: &PauliSum,
    obs: &ObservableSet,
    opts: &SweepOptions,
    seed: u64,
) -> Result<SweepRow> {
    let rec = measure_with(psi, spec, label, h, obs)?;
    let values = ObservableValues { energy: rec.energy, parity: rec.parity, number: rec.number, edge_corr: rec.edge_corr };
    let noisy = match &opts.noise {
        Some(model) => {
            let rho = dephase(&to_density(psi), &model.with_seed(seed));
            Some(ObservableValues {
                energy: noisy_expectation(&rho, h)?,
                parity: noisy_expectation(&rho, obs.parity())?,
                number: noisy_expectation(&rho, obs.number())?,
                edge_corr: noisy_expectation(&rho, obs.edge())?,
            })
        }
        None => None,
    };
    let sampled = match opts.shots {
        Some(shots) => {
            let est = |o: &PauliSum, k: u64| -> Result<Estimate> {
                let (value, stderr) = sample_expectation(psi, o, shots, splitmix64(seed ^ k))?;
                Ok(Estimate { value, stderr })
            };
            Some(SampledValues {
                energy: est(h, 1)?,
                parity: est(obs.parity(), 2)?,
                number: est(obs.number(), 3)?,
                edge_corr: est(obs.edge(), 4)?,
            })
        }
        None => None,
    };
    Ok(SweepRow { mu: rec.mu, label: label.clone(), values: Some(values), site_corr: obs.site_profile(psi)?, noisy, sampled, error: None })
}

/// Noisy sweeps at one chemical potential for a list of `τ/T₂*` ratios.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoiseSweep {
    pub tau_ratios: Vec<f64>,
    /// Quasiparticle energies `2ε` from the BdG matrix, for overlay.
    pub bdg: Vec<f64>,
    /// One single-point sweep per ratio, in the order of `tau_ratios`.
    pub sweeps: Vec<SweepResult>,
}

impl NoiseSweep {
    pub fn ratios_and_sweeps(&self) -> impl Iterator<Item = (f64, &SweepResult)> {
        self.tau_ratios.iter().copied().zip(&self.sweeps)
    }
}

/// Dephased energies of `labels` at `spec` for each `τ/T₂*` ratio. The jitter
/// draw for a given label is the same at every ratio, so each curve is a
/// single realisation of the effective `T₂*`.
pub fn noise_sweep(
    spec: &ChainSpec,
    labels: &[ExcitationSet],
    tau_ratios: &[f64],
    t2_star: f64,
    jitter_b: f64,
    seed: u64,
) -> Result<NoiseSweep> {
    let mu = spec.uniform_params().map(|p| p.0).ok_or_else(|| Error::InvalidSpec("noise_sweep needs a uniform chain".into()))?;
    let grid = MuGrid::new(vec![mu])?;
    let sweeps = tau_ratios
        .iter()
        .map(|&r| {
            let noise = NoiseModel::new(t2_star, r * t2_star, jitter_b, seed)?;
            let opts = SweepOptions { noise: Some(noise), seed, ..Default::default() };
            sweep_spectrum_with(spec, &grid, labels, &opts)
        })
        .collect::<Result<_>>()?;
    Ok(NoiseSweep { tau_ratios: tau_ratios.to_vec(), bdg: bdg_excitation_energies(spec), sweeps })
}

/// Ground-state parity map over `(Δ, μ)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParityScan {
    pub t: f64,
    pub n: usize,
    pub deltas: Vec<f64>,
    pub mu: Vec<f64>,
    /// `parity[d][i]` is the sign of `⟨P⟩` at `deltas[d]`, `mu[i]`.
    pub parity: Vec<Vec<i8>>,
    pub predictions: Vec<crate::topology::ParitySwitches>,
}

impl ParityScan {
    /// Midpoints between neighbouring grid points whose parities differ.
    pub fn flips(&self, delta_index: usize) -> Vec<f64> {
        let row = &self.parity[delta_index];
        (1..row.len()).filter(|&i| row[i] != row[i - 1]).map(|i| 0.5 * (self.mu[i] + self.mu[i - 1])).collect()
    }
}

fn sign(x: f64) -> i8 {
    if x >= 0.0 {
        1
    } else {
        -1
    }
}

/// Parity of the compiled ground state on every `(Δ, μ)` cell. Negative `μ`
/// is allowed. Degenerate spectra are compiled anyway since any state of the
/// lowest level has a definite parity.
pub fn parity_scan(t: f64, deltas: &[f64], grid: &MuGrid, n: usize) -> Result<ParityScan> {
    let opts = CompileOptions { allow_degenerate: true, ..Default::default() };
    let obs = ObservableSet::new(n);
    let ground = ExcitationSet::empty();
    let parity = deltas
        .iter()
        .map(|&d| {
            grid.values()
                .par_iter()
                .map(|&mu| {
                    let spec = ChainSpec::uniform(n, mu, t, d)?;
                    let model = GaussianModel::from_spec(&spec, opts)?;
                    let psi = apply_circuit(&model.circuit(&ground)?);
                    Ok(sign(expectation(obs.parity(), &psi)?))
                })
                .collect::<Result<Vec<i8>>>()
        })
        .collect::<Result<_>>()?;
    Ok(ParityScan {
        t,
        n,
        deltas: deltas.to_vec(),
        mu: grid.values().to_vec(),
        parity,
        predictions: deltas.iter().map(|&d| crate::topology::parity_switch_mu(t, d, n)).collect(),
    })
}

/// Same map computed from exact diagonalization: the sign is `+1` when the
/// even sector holds the ground state.
pub fn ed_parity_scan(t: f64, deltas: &[f64], grid: &MuGrid, n: usize) -> Result<ParityScan> {
    let parity = deltas
        .iter()
        .map(|&d| {
            grid.values()
                .par_iter()
                .map(|&mu| {
                    let h = kitaev_pauli(&ChainSpec::uniform(n, mu, t, d)?);
                    let (even, odd) = crate::fermion::sector_ground_energies(&h)?;
                    Ok(if even <= odd { 1 } else { -1 })
                })
                .collect::<Result<Vec<i8>>>()
        })
        .collect::<Result<_>>()?;
    Ok(ParityScan {
        t,
        n,
        deltas: deltas.to_vec(),
        mu: grid.values().to_vec(),
        parity,
        predictions: deltas.iter().map(|&d| crate::topology::parity_switch_mu(t, d, n)).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationRow {
    pub label: ExcitationSet,
    pub mu: f64,
    pub m: usize,
    pub value: f64,
}

/// `⟨iγ₁γ_m⟩` for `m = 2..=2n` for every label and chemical potential.
pub fn site_correlation_profile(spec: &ChainSpec, labels: &[ExcitationSet], mus: &[f64]) -> Result<Vec<CorrelationRow>> {
    check_labels(labels, spec.n())?;
    let obs = ObservableSet::new(spec.n());
    let per_mu: Vec<Vec<CorrelationRow>> = mus
        .par_iter()
        .map(|&mu| {
            let model = GaussianModel::from_spec(&spec.with_uniform_mu(mu)?, CompileOptions::default())?;
            let mut rows = Vec::new();
            for label in labels {
                let psi = apply_circuit(&model.circuit(label)?);
                for (k, value) in obs.site_profile(&psi)?.into_iter().enumerate() {
                    rows.push(CorrelationRow { label: label.clone(), mu, m: k + 2, value });
                }
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;
    Ok(per_mu.into_iter().flatten().collect())
}
