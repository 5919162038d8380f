//! Fermionic operator algebra, the Kitaev Hamiltonian, the Jordan–Wigner
//! map, Majorana quadratic forms and the dense diagonalization oracle.

mod chain;
mod diagonalize;
mod jordan_wigner;
mod majorana;
mod operator;

pub use chain::ChainSpec;
pub(crate) use diagonalize::hermitian_eigen;
pub use diagonalize::{exact_diagonalize, exact_diagonalize_with_cap, sector_ground_energies, Spectrum, DEFAULT_DIMENSION_CAP};
pub use jordan_wigner::{jordan_wigner, ladder_to_pauli};
pub use majorana::{majorana_quadratic, majorana_quadratic_sized, MajoranaQuadratic};
pub use operator::{build_kitaev, FermionOperator, Ladder, COEFF_EPS};

/// Qubit Hamiltonian of a Kitaev chain.
pub fn kitaev_pauli(spec: &ChainSpec) -> PauliSum {
    jordan_wigner(&build_kitaev(spec), spec.n()).expect("sites are within the chain")
}

use crate::pauli::PauliSum;
