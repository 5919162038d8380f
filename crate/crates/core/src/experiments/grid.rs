use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest chemical potential used in place of `μ = 0`, where the Kitaev
/// chain at `Δ = |t|` is exactly degenerate.
pub const MU_ZERO_PLUS: f64 = 1e-8;
pub const DEFAULT_STEP: f64 = 0.155;
pub const DEFAULT_STEPS: usize = 20;

/// Strictly increasing list of chemical potentials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MuGrid(Vec<f64>);

impl MuGrid {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidGrid("grid is empty".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid("grid values must be finite".into()));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGrid("grid must be strictly increasing".into()));
        }
        Ok(Self(values))
    }

    /// `{10⁻⁸} ∪ {0.155 k : k = 1..20}`, 21 points up to 3.1.
    pub fn default_sweep() -> Self {
        let mut v = vec![MU_ZERO_PLUS];
        v.extend((1..=DEFAULT_STEPS).map(|k| DEFAULT_STEP * k as f64));
        Self(v)
    }

    /// `points` evenly spaced values from `start` to `stop` inclusive.
    pub fn linspace(start: f64, stop: f64, points: usize) -> Result<Self> {
        match points {
            0 => Err(Error::InvalidGrid("need at least one point".into())),
            1 => Self::new(vec![start]),
            _ => {
                let step = (stop - start) / (points - 1) as f64;
                Self::new((0..points).map(|i| if i + 1 == points { stop } else { start + step * i as f64 }).collect())
            }
        }
    }

    /// 400 points on `[−5·10⁻⁸, 5·10⁻⁸]`.
    pub fn fine_zero_crossing() -> Self {
        Self::linspace(-5e-8, 5e-8, 400).expect("valid fine grid")
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest spacing between neighbouring points.
    pub fn max_step(&self) -> f64 {
        self.0.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max)
    }

    pub(crate) fn require_sweep_range(&self) -> Result<()> {
        if self.0[0] < MU_ZERO_PLUS {
            return Err(Error::InvalidGrid(format!("sweep grids must lie in [{MU_ZERO_PLUS:e}, ∞); use parity_scan for negative μ")));
        }
        Ok(())
    }
}

impl FromStr for MuGrid {
    type Err = Error;

    /// `start:stop:points`, or `default`.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "default" {
            return Ok(Self::default_sweep());
        }
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, p] = parts.as_slice() else {
            return Err(Error::InvalidGrid(format!("expected start:stop:points, got {s:?}")));
        };
        let bad = |_| Error::InvalidGrid(format!("bad grid {s:?}"));
        let start: f64 = a.trim().parse().map_err(bad)?;
        let stop: f64 = b.trim().parse().map_err(bad)?;
        let points: usize = p.trim().parse().map_err(|_| Error::InvalidGrid(format!("bad point count in {s:?}")))?;
        Self::linspace(start, stop, points)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid() {
        let g = MuGrid::default_sweep();
        assert_eq!(g.len(), 21);
        assert_eq!(g.values()[0], 1e-8);
        assert!((g.values()[20] - 3.1).abs() < 1e-12);
    }

    #[test]
    fn parsing_and_validation() {
        let g: MuGrid = "-5e-8:5e-8:400".parse().unwrap();
        assert_eq!(g.len(), 400);
        assert_eq!(g.values()[399], 5e-8);
        assert!(!g.values().contains(&0.0));
        assert!("1:2".parse::<MuGrid>().is_err());
        assert!(MuGrid::new(vec![1.0, 1.0]).is_err());
        assert!(g.require_sweep_range().is_err());
    }
}
