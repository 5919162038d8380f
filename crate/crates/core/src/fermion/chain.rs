use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters of a finite Kitaev chain: per-site chemical potential and
/// per-bond tunneling and pairing amplitudes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainSpec {
    n: usize,
    mu: Vec<f64>,
    t: Vec<f64>,
    delta: Vec<f64>,
}

impl ChainSpec {
    pub fn new(mu: Vec<f64>, t: Vec<f64>, delta: Vec<f64>) -> Result<Self> {
        let n = mu.len();
        if n == 0 {
            return Err(Error::InvalidSpec("chain needs at least one site".into()));
        }
        if t.len() + 1 != n || delta.len() + 1 != n {
            return Err(Error::InvalidSpec(format!("{n} sites need {} bonds, got t: {}, delta: {}", n - 1, t.len(), delta.len())));
        }
        if mu.iter().chain(&t).chain(&delta).any(|x| !x.is_finite()) {
            return Err(Error::InvalidSpec("parameters must be finite".into()));
        }
        Ok(Self { n, mu, t, delta })
    }

    /// Homogeneous chain with the same `(mu, t, delta)` on every site and bond.
    pub fn uniform(n: usize, mu: f64, t: f64, delta: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("chain needs at least one site".into()));
        }
        Self::new(vec![mu; n], vec![t; n - 1], vec![delta; n - 1])
    }

    /// Copy with every site's chemical potential replaced by `mu`.
    pub fn with_uniform_mu(&self, mu: f64) -> Result<Self> {
        Self::new(vec![mu; self.n], self.t.clone(), self.delta.clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    pub fn t(&self) -> &[f64] {
        &self.t
    }

    pub fn delta(&self) -> &[f64] {
        &self.delta
    }

    /// `(mu, t, delta)` when the chain is homogeneous.
    pub fn uniform_params(&self) -> Option<(f64, f64, f64)> {
        let mu = self.mu[0];
        let t = self.t.first().copied().unwrap_or(0.0);
        let d = self.delta.first().copied().unwrap_or(0.0);
        let same = self.mu.iter().all(|&x| x == mu) && self.t.iter().all(|&x| x == t) && self.delta.iter().all(|&x| x == d);
        same.then_some((mu, t, d))
    }
}
