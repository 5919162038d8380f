//! Exact eigenstate preparation for finite Kitaev chains.
//!
//! A quadratic fermionic Hamiltonian is brought to Majorana normal form, its
//! Bogoliubov transformation is compiled into a nearest-neighbour Givens
//! network (`X`, `RZ`, `RYXXY` gates), and the resulting circuits are executed
//! on a statevector / density-matrix simulator to evaluate energies, parity,
//! particle number and Majorana correlators.

pub mod compiler;
pub mod error;
pub mod experiments;
pub mod fermion;
pub mod observables;
pub mod pauli;
pub mod simulator;
pub mod topology;

pub use error::{Error, Result};
