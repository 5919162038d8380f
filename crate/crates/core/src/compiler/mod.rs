//! Compilation of quadratic Hamiltonians into eigenstate-preparation circuits:
//! Majorana Schur form, Bogoliubov transformation, Givens network.

mod bogoliubov;
mod circuit;
mod compile;
pub mod givens;
mod pfaffian;
mod schur;

pub use bogoliubov::{bogoliubov_w, omega, BogoliubovW};
pub use circuit::{ryxxy_matrix, wrap_angle, ExcitationSet, Gate, GaussianCircuit};
pub use compile::{compile_eigenstate, compile_eigenstate_with, gate_angle_deviation, CompileOptions, GaussianModel};
pub use pfaffian::{pfaffian_exact, pfaffian_sign};
pub use schur::{schur_antisymmetric, SchurForm};
