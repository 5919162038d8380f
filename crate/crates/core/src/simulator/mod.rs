//! Statevector and density-matrix execution of compiled circuits, pure
//! dephasing, and finite-shot sampling.

mod density;
mod sampling;
mod statevector;

pub use density::{dephase, noisy_expectation, to_density, DensityMatrix, GateDurations, NoiseModel};
pub use sampling::sample_expectation;
pub use statevector::{apply_circuit, expectation, StateVector};
