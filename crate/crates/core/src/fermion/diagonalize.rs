use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::PauliSum;

pub const DEFAULT_DIMENSION_CAP: usize = 12;

/// Eigenvalues in ascending order with matching eigenvector columns.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub vectors: DMatrix<Complex64>,
}

impl Spectrum {
    pub fn vector(&self, i: usize) -> DVector<Complex64> {
        self.vectors.column(i).into_owned()
    }
}

pub fn exact_diagonalize(h: &PauliSum) -> Result<Spectrum> {
    exact_diagonalize_with_cap(h, DEFAULT_DIMENSION_CAP)
}

/// Full dense diagonalization; Hermiticity is enforced by dropping imaginary
/// coefficient parts above `1e−12` as an error.
pub fn exact_diagonalize_with_cap(h: &PauliSum, cap: usize) -> Result<Spectrum> {
    let n = h.n_qubits();
    if n > cap {
        return Err(Error::DimensionCap { n, cap });
    }
    if !h.is_hermitian(1e-12) {
        return Err(Error::NonHermitian(format!("imaginary coefficient {:e}", h.max_abs_imag())));
    }
    Ok(hermitian_eigen(h.real_part().to_dense()))
}

pub(crate) fn hermitian_eigen(m: DMatrix<Complex64>) -> Spectrum {
    let eig = m.symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let cols: Vec<_> = order.iter().map(|&i| eig.eigenvectors.column(i)).collect();
    Spectrum { values, vectors: DMatrix::from_columns(&cols) }
}

/// Lowest energies in the even and odd fermion-parity sectors
/// (`Z⊗…⊗Z = ±1`), diagonalized separately so exact ties resolve cleanly.
pub fn sector_ground_energies(h: &PauliSum) -> Result<(f64, f64)> {
    let n = h.n_qubits();
    if n > DEFAULT_DIMENSION_CAP {
        return Err(Error::DimensionCap { n, cap: DEFAULT_DIMENSION_CAP });
    }
    if h.terms().any(|(p, _)| p.x.count_ones() % 2 == 1) {
        return Err(Error::InvalidSpec("Hamiltonian does not conserve fermion parity".into()));
    }
    let dense = h.real_part().to_dense();
    let dim = 1usize << n;
    let mut lowest = [f64::INFINITY; 2];
    for (parity, slot) in lowest.iter_mut().enumerate() {
        let idx: Vec<usize> = (0..dim).filter(|b| (b.count_ones() as usize) % 2 == parity).collect();
        let sub = DMatrix::from_fn(idx.len(), idx.len(), |i, j| dense[(idx[i], idx[j])]);
        if let Some(e) = hermitian_eigen(sub).values.first() {
            *slot = *e;
        }
    }
    Ok((lowest[0], lowest[1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_operator_spectrum() {
        let s = exact_diagonalize(&PauliSum::zero(2)).unwrap();
        assert_eq!(s.values, vec![0.0; 4]);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(exact_diagonalize_with_cap(&PauliSum::zero(3), 2), Err(Error::DimensionCap { n: 3, cap: 2 })));
    }

    #[test]
    fn ascending_with_residuals() {
        let h = PauliSum::from_labels(2, &[("XX", 0.7), ("ZI", -0.3), ("IZ", 1.1), ("YY", 0.2)]).unwrap();
        let s = exact_diagonalize(&h).unwrap();
        assert!(s.values.windows(2).all(|w| w[0] <= w[1]));
        let m = h.to_dense();
        for (i, &e) in s.values.iter().enumerate() {
            let v = s.vector(i);
            assert!((&m * &v - v.scale(e)).norm() < 1e-9);
        }
    }
}
