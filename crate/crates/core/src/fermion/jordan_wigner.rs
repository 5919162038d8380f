use num_complex::Complex64;

use super::operator::{FermionOperator, Ladder};
use crate::error::{Error, Result};
use crate::pauli::{PauliString, PauliSum, MAX_QUBITS};

/// Qubit image of a ladder operator: `c_k → (Π_{j<k} Z_j)(X_k + iY_k)/2`,
/// `c†_k → (Π_{j<k} Z_j)(X_k − iY_k)/2`.
pub fn ladder_to_pauli(l: Ladder, n: usize) -> PauliSum {
    let tail = (1u64 << l.site) - 1;
    let bit = 1u64 << l.site;
    let x = PauliString { x: bit, z: tail };
    let y = PauliString { x: bit, z: tail | bit };
    let sign = if l.dagger { -0.5 } else { 0.5 };
    PauliSum::from_string(n, x, 0.5) + PauliSum::from_string(n, y, Complex64::new(0.0, sign))
}

/// Jordan–Wigner transform; site `k` maps to qubit `k`.
pub fn jordan_wigner(op: &FermionOperator, n: usize) -> Result<PauliSum> {
    if n > MAX_QUBITS {
        return Err(Error::DimensionCap { n, cap: MAX_QUBITS });
    }
    let span = op.site_span();
    if span > n {
        return Err(Error::IndexOutOfRange { index: span - 1, bound: n });
    }
    let create: Vec<PauliSum> = (0..n).map(|k| ladder_to_pauli(Ladder::create(k), n)).collect();
    let annihilate: Vec<PauliSum> = (0..n).map(|k| ladder_to_pauli(Ladder::annihilate(k), n)).collect();
    let mut out = PauliSum::zero(n);
    for (ops, c) in op.terms() {
        let mut term = PauliSum::from_string(n, PauliString::IDENTITY, c);
        for l in ops {
            let img = if l.dagger { &create[l.site] } else { &annihilate[l.site] };
            term = &term * img;
        }
        out = out + term;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_operator() {
        let h = jordan_wigner(&FermionOperator::number(0), 1).unwrap();
        let expect = PauliSum::from_labels(1, &[("I", 0.5), ("Z", -0.5)]).unwrap();
        assert_eq!(h, expect);
    }

    #[test]
    fn annihilator_lowers_occupied_qubit() {
        let c = ladder_to_pauli(Ladder::annihilate(1), 2).to_dense();
        // |q1=1, q0=0⟩ = index 2 → |00⟩ with Z tail on q0 (unoccupied: +1)
        assert!((c[(0, 2)] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        // |q1=1, q0=1⟩ = index 3 → −|01⟩
        assert!((c[(1, 3)] + Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn index_out_of_range() {
        assert!(matches!(jordan_wigner(&FermionOperator::number(3), 2), Err(Error::IndexOutOfRange { index: 3, bound: 2 })));
    }
}
