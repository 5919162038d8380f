use std::f64::consts::PI;

use super::bogoliubov::{bogoliubov_w, BogoliubovW};
use super::circuit::{wrap_angle, ExcitationSet, Gate, GaussianCircuit};
use super::givens::{fermionic_gaussian_decomposition, GivensOp};
use super::schur::{schur_antisymmetric, SchurForm};
use crate::error::{Error, Result};
use crate::fermion::{ChainSpec, MajoranaQuadratic};

#[derive(Debug, Clone, Copy)]
pub struct CompileOptions {
    /// Relative gap between consecutive mode energies below which the
    /// Hamiltonian counts as degenerate.
    pub degeneracy_rel_tol: f64,
    /// Compile anyway when modes are degenerate; the circuits remain exact
    /// eigenstates but the labelling of degenerate modes is arbitrary.
    pub allow_degenerate: bool,
}

impl Default for CompileOptions {
    fn default() -> Self {
        Self { degeneracy_rel_tol: 1e-12, allow_degenerate: false }
    }
}

/// Diagonalized quadratic Hamiltonian from which circuits for every
/// excitation set are generated.
#[derive(Debug, Clone)]
pub struct GaussianModel {
    quadratic: MajoranaQuadratic,
    schur: SchurForm,
    bogoliubov: BogoliubovW,
    spec: Option<ChainSpec>,
}

impl GaussianModel {
    pub fn new(quadratic: MajoranaQuadratic, opts: CompileOptions) -> Result<Self> {
        let schur = schur_antisymmetric(quadratic.a())?;
        if !opts.allow_degenerate {
            check_degeneracy(&schur.eps, opts.degeneracy_rel_tol)?;
        }
        let bogoliubov = bogoliubov_w(&schur);
        Ok(Self { quadratic, schur, bogoliubov, spec: None })
    }

    pub fn from_spec(spec: &ChainSpec, opts: CompileOptions) -> Result<Self> {
        let mut model = Self::new(MajoranaQuadratic::from_spec(spec), opts)?;
        model.spec = Some(spec.clone());
        Ok(model)
    }

    pub fn n_modes(&self) -> usize {
        self.schur.n_modes()
    }

    pub fn quadratic(&self) -> &MajoranaQuadratic {
        &self.quadratic
    }

    pub fn schur(&self) -> &SchurForm {
        &self.schur
    }

    pub fn bogoliubov(&self) -> &BogoliubovW {
        &self.bogoliubov
    }

    /// Single-quasiparticle excitation energies `2ε_k`, ascending.
    pub fn quasiparticle_energies(&self) -> Vec<f64> {
        self.schur.eps.iter().map(|e| 2.0 * e).collect()
    }

    pub fn ground_energy(&self) -> f64 {
        self.quadratic.c0() - self.schur.eps.iter().sum::<f64>()
    }

    pub fn energy(&self, set: &ExcitationSet) -> Result<f64> {
        set.check_bound(self.n_modes())?;
        Ok(self.ground_energy() + set.modes().iter().map(|&k| 2.0 * self.schur.eps[k]).sum::<f64>())
    }

    /// Circuit preparing the eigenstate with the quasiparticles in `set`
    /// occupied: `X` on each listed qubit, then the Givens network.
    pub fn circuit(&self, set: &ExcitationSet) -> Result<GaussianCircuit> {
        let n = self.n_modes();
        set.check_bound(n)?;
        let mut gates: Vec<Gate> = set.modes().iter().map(|&q| Gate::X { q }).collect();
        let decomposition = fermionic_gaussian_decomposition(&self.bogoliubov.w_l());
        for layer in decomposition.circuit_layers() {
            for op in layer {
                match op {
                    GivensOp::ParticleHole => gates.push(Gate::X { q: n - 1 }),
                    GivensOp::Rotation { i, j, theta, phi } => {
                        debug_assert_eq!(j, i + 1);
                        gates.push(Gate::Ryxxy { q: i, alpha: -theta });
                        let beta = wrap_angle(phi);
                        if beta != 0.0 {
                            gates.push(Gate::Rz { q: j, beta });
                        }
                    }
                }
            }
        }
        GaussianCircuit::new(n, gates, set.clone(), self.spec.clone())
    }
}

fn check_degeneracy(eps: &[f64], rel_tol: f64) -> Result<()> {
    let max = eps.iter().copied().fold(0.0, f64::max);
    for (mode, w) in eps.windows(2).enumerate() {
        let gap = w[1] - w[0];
        if gap <= rel_tol * max {
            return Err(Error::DegenerateHamiltonian { mode, gap });
        }
    }
    Ok(())
}

pub fn compile_eigenstate(spec: &ChainSpec, set: &ExcitationSet) -> Result<GaussianCircuit> {
    compile_eigenstate_with(spec, set, CompileOptions::default())
}

pub fn compile_eigenstate_with(spec: &ChainSpec, set: &ExcitationSet, opts: CompileOptions) -> Result<GaussianCircuit> {
    GaussianModel::from_spec(spec, opts)?.circuit(set)
}

/// Per-gate `||α_a| − |α_b|| / π` between the ground-state circuits of two
/// specs. Magnitudes are compared because the sign of a `±π/2` rotation is
/// not numerically determined.
pub fn gate_angle_deviation(spec_a: &ChainSpec, spec_b: &ChainSpec) -> Result<Vec<f64>> {
    let ca = compile_eigenstate(spec_a, &ExcitationSet::empty())?;
    let cb = compile_eigenstate(spec_b, &ExcitationSet::empty())?;
    if ca.ryxxy_layout() != cb.ryxxy_layout() {
        return Err(Error::LayoutMismatch(format!("{:?} vs {:?}", ca.ryxxy_layout(), cb.ryxxy_layout())));
    }
    Ok(ca.ryxxy_angles().iter().zip(cb.ryxxy_angles()).map(|(a, b)| (a.abs() - b.abs()).abs() / PI).collect())
}
