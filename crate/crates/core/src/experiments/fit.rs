use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::sweep::SweepResult;
use crate::compiler::ExcitationSet;
use crate::error::{Error, Result};

/// `c0 + c1·μ + c2·μ²` with the root-sum-square of the residuals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadraticFit {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub residual: f64,
}

impl QuadraticFit {
    pub fn eval(&self, x: f64) -> f64 {
        self.c0 + self.c1 * x + self.c2 * x * x
    }
}

const MIN_POINTS: usize = 4;
const RANK_TOL: f64 = 1e-12;

/// Least-squares quadratic through `(xs, ys)`.
pub fn fit_quadratic(xs: &[f64], ys: &[f64]) -> Result<QuadraticFit> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch(xs.len(), ys.len()));
    }
    if xs.len() < MIN_POINTS {
        return Err(Error::InsufficientData { needed: MIN_POINTS, got: xs.len() });
    }
    let design = DMatrix::from_fn(xs.len(), 3, |i, j| xs[i].powi(j as i32));
    let svd = design.clone().svd(true, true);
    let smax = svd.singular_values.max();
    if svd.singular_values.min() <= RANK_TOL * smax.max(1.0) {
        return Err(Error::RankDeficient);
    }
    let y = DVector::from_column_slice(ys);
    let c = svd.solve(&y, 0.0).map_err(|_| Error::RankDeficient)?;
    let residual = (&design * &c - &y).norm();
    Ok(QuadraticFit { c0: c[0], c1: c[1], c2: c[2], residual })
}

/// Quadratic fit of `|⟨iγ₁γ₂ₙ⟩|` against `μ` for one label. Failed rows are
/// skipped.
pub fn fit_edge_decay(sweep: &SweepResult, label: &ExcitationSet) -> Result<QuadraticFit> {
    let (xs, ys): (Vec<f64>, Vec<f64>) = sweep.rows_for(label).filter_map(|r| r.edge_corr().map(|e| (r.mu, e.abs()))).unzip();
    fit_quadratic(&xs, &ys)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_quadratic() {
        let xs: Vec<f64> = (0..6).map(|i| i as f64 * 0.5).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 0.57 - 0.18 * x + 0.03 * x * x).collect();
        let f = fit_quadratic(&xs, &ys).unwrap();
        assert!((f.c0 - 0.57).abs() < 1e-12 && (f.c1 + 0.18).abs() < 1e-12 && (f.c2 - 0.03).abs() < 1e-12);
        assert!(f.residual < 1e-12);
        assert!((f.eval(2.0) - ys[4]).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(fit_quadratic(&[0.0, 1.0, 2.0], &[0.0; 3]), Err(Error::InsufficientData { .. })));
        assert!(matches!(fit_quadratic(&[1.0, 1.0, 2.0, 2.0], &[0.0; 4]), Err(Error::RankDeficient)));
        assert!(matches!(fit_quadratic(&[1.0; 4], &[0.0; 5]), Err(Error::LengthMismatch(4, 5))));
    }
}
