use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::statevector::{check_hermitian, expectation, StateVector};
use crate::error::{Error, Result};
use crate::pauli::PauliSum;

/// Finite-shot estimate of `⟨ψ|O|ψ⟩`. Each non-identity Pauli string is
/// measured `shots` times in its eigenbasis (outcome `+1` with probability
/// `(1 + ⟨P⟩)/2`); returns the weighted mean and its binomial standard error.
pub fn sample_expectation(psi: &StateVector, obs: &PauliSum, shots: u64, seed: u64) -> Result<(f64, f64)> {
    check_hermitian(obs)?;
    if shots == 0 {
        return Err(Error::InvalidConfig("shots must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut estimate = 0.0;
    let mut variance = 0.0;
    for (p, c) in obs.terms() {
        let c = c.re;
        if p.is_identity() {
            estimate += c;
            continue;
        }
        let single = PauliSum::from_string(obs.n_qubits(), *p, 1.0);
        let exact = expectation(&single, psi)?;
        let p_plus = ((1.0 + exact) / 2.0).clamp(0.0, 1.0);
        let plus = (0..shots).filter(|_| rng.random::<f64>() < p_plus).count() as f64;
        let mean = (2.0 * plus - shots as f64) / shots as f64;
        estimate += c * mean;
        variance += c * c * (1.0 - mean * mean) / shots as f64;
    }
    Ok((estimate, variance.sqrt()))
}
