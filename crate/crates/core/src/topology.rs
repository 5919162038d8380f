//! Single-particle predictions: BdG spectrum, parity-switch positions,
//! finite-chain critical chemical potential and the winding number.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fermion::ChainSpec;

/// All `2n` eigenvalues of `[[h, D], [−D, −h]]` (ascending), where `h` is the
/// hopping matrix (`h_kk = μ_k`, `h_{k,k+1} = −t_k`) and `D` the antisymmetric
/// pairing matrix (`D_{k,k+1} = Δ_k`). They come in `±E` pairs with `E`
/// the quasiparticle excitation energies.
pub fn bdg_spectrum(spec: &ChainSpec) -> Vec<f64> {
    let n = spec.n();
    let mut m = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for k in 0..n {
        m[(k, k)] = spec.mu()[k];
        m[(n + k, n + k)] = -spec.mu()[k];
    }
    for k in 0..n - 1 {
        let (t, d) = (spec.t()[k], spec.delta()[k]);
        for (i, j) in [(k, k + 1), (k + 1, k)] {
            m[(i, j)] = -t;
            m[(n + i, n + j)] = t;
        }
        m[(k, n + k + 1)] = d;
        m[(k + 1, n + k)] = -d;
        m[(n + k + 1, k)] = d;
        m[(n + k, k + 1)] = -d;
    }
    let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Non-negative half of [`bdg_spectrum`], ascending.
pub fn bdg_excitation_energies(spec: &ChainSpec) -> Vec<f64> {
    let ev = bdg_spectrum(spec);
    let n = spec.n();
    ev[n..].iter().map(|e| e.abs()).collect()
}

/// Chemical potentials where the ground-state parity switches.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParitySwitches {
    /// Sorted distinct non-negative values; the mirror `−μ` is implied.
    pub values: Vec<f64>,
    /// `t² < Δ²`: the formula has an imaginary root, no real switch.
    pub imaginary: bool,
}

/// `μ_PS = 2√(t² − Δ²) cos(πp/(n+1))`, `p = 1..⌊n/2⌋`. For `Δ = |t|` the
/// result is the single point `{0}`.
pub fn parity_switch_mu(t: f64, delta: f64, n: usize) -> ParitySwitches {
    let disc = t * t - delta * delta;
    if disc < 0.0 {
        return ParitySwitches { values: Vec::new(), imaginary: true };
    }
    let amp = 2.0 * disc.sqrt();
    let mut values: Vec<f64> = (1..=n / 2).map(|p| (amp * (PI * p as f64 / (n as f64 + 1.0)).cos()).abs()).collect();
    if disc == 0.0 {
        values = vec![0.0];
    }
    values.sort_by(f64::total_cmp);
    values.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    ParitySwitches { values, imaginary: false }
}

/// `2|t|(1 − 1/n)`.
pub fn critical_mu(n: usize, t: f64) -> f64 {
    2.0 * t.abs() * (1.0 - 1.0 / n as f64)
}

/// `(t̃, Δ̃) = (t(1 − 1/n), Δ(1 − 1/n))`.
pub fn effective_couplings(t: f64, delta: f64, n: usize) -> (f64, f64) {
    let f = 1.0 - 1.0 / n as f64;
    (t * f, delta * f)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WindingConfig {
    k_samples: usize,
}

impl WindingConfig {
    pub fn new(k_samples: usize) -> Result<Self> {
        if k_samples < 101 || k_samples.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!("k_samples must be odd and ≥ 101, got {k_samples}")));
        }
        Ok(Self { k_samples })
    }

    pub fn k_samples(&self) -> usize {
        self.k_samples
    }
}

impl Default for WindingConfig {
    fn default() -> Self {
        Self { k_samples: 4001 }
    }
}

const BOUNDARY_TOL: f64 = 1e-9;

/// Winding of `w(K) = arg[2Δ̃ sin K + i(μ + 2t̃ cos K)]` over `K ∈ [−π, π]`,
/// computed by unwrapping phase jumps larger than `π`.
pub fn winding_number(mu: f64, t: f64, delta: f64, n: usize, cfg: &WindingConfig) -> Result<i32> {
    let (tt, dt) = effective_couplings(t, delta, n);
    // |v(K)| vanishes somewhere iff Δ̃ = 0 with |μ| ≤ 2|t̃|, or |μ| = 2|t̃|
    if ((mu.abs() - 2.0 * tt.abs()).abs() < BOUNDARY_TOL) || (dt.abs() < BOUNDARY_TOL && mu.abs() <= 2.0 * tt.abs() + BOUNDARY_TOL) {
        return Err(Error::BoundaryPoint);
    }
    let steps = cfg.k_samples - 1;
    let mut prev = f64::NAN;
    let mut unwrapped = 0.0;
    let mut start = 0.0;
    for i in 0..=steps {
        let k = -PI + 2.0 * PI * i as f64 / steps as f64;
        let (re, im) = (2.0 * dt * k.sin(), mu + 2.0 * tt * k.cos());
        if re.hypot(im) < BOUNDARY_TOL {
            return Err(Error::BoundaryPoint);
        }
        let w = im.atan2(re);
        if i == 0 {
            start = w;
            unwrapped = w;
        } else {
            let mut d = w - prev;
            while d > PI {
                d -= 2.0 * PI;
            }
            while d < -PI {
                d += 2.0 * PI;
            }
            unwrapped += d;
        }
        prev = w;
    }
    Ok(((unwrapped - start) / (2.0 * PI)).round() as i32)
}
