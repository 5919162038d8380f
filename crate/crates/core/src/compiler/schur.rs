use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::pfaffian::pfaffian_sign;
use crate::error::{Error, Result};
use crate::fermion::hermitian_eigen;

/// Eigenvalues of `iA` below this fraction of the largest are re-canonicalized
/// on their real invariant subspace.
const CLUSTER_REL_TOL: f64 = 1e-7;
/// Lowest mode energies below this fraction of `max|A|` get their orientation
/// from the exact Pfaffian sign.
const ORIENT_REL_TOL: f64 = 1e-6;

/// Real Schur form `R A Rᵀ = [[0, diag ε], [−diag ε, 0]]` of an antisymmetric
/// matrix. Row `k` of `R` is `u_k`, row `n + k` is `w_k`, so `u_kᵀ A w_k = ε_k`.
#[derive(Debug, Clone)]
pub struct SchurForm {
    pub r: DMatrix<f64>,
    pub eps: Vec<f64>,
}

impl SchurForm {
    pub fn n_modes(&self) -> usize {
        self.eps.len()
    }

    /// `R A Rᵀ` minus the canonical block form, max-norm.
    pub fn canonical_residual(&self, a: &DMatrix<f64>) -> f64 {
        let n = self.n_modes();
        let mut target = DMatrix::zeros(2 * n, 2 * n);
        for (k, &e) in self.eps.iter().enumerate() {
            target[(k, n + k)] = e;
            target[(n + k, k)] = -e;
        }
        (&self.r * a * self.r.transpose() - target).amax()
    }

    pub fn orthogonality_residual(&self) -> f64 {
        let d = self.r.nrows();
        (&self.r * self.r.transpose() - DMatrix::<f64>::identity(d, d)).amax()
    }
}

struct Mode {
    u: DVector<f64>,
    w: DVector<f64>,
    eps: f64,
}

/// Canonical pairs of an antisymmetric matrix via the Hermitian eigenproblem
/// of `iA`. Near-zero eigenvalues are recombined on their real subspace.
fn canonical_modes(a: &DMatrix<f64>) -> Vec<Mode> {
    let dim = a.nrows();
    let n = dim / 2;
    if n == 0 {
        return Vec::new();
    }
    if a.amax() <= f64::MIN_POSITIVE {
        return (0..n)
            .map(|k| Mode {
                u: DVector::from_fn(dim, |i, _| if i == 2 * k { 1.0 } else { 0.0 }),
                w: DVector::from_fn(dim, |i, _| if i == 2 * k + 1 { 1.0 } else { 0.0 }),
                eps: 0.0,
            })
            .collect();
    }
    let h = a.map(|x| Complex64::new(0.0, x));
    let spec = hermitian_eigen(h);
    let lam_max = spec.values[dim - 1];
    let tol = CLUSTER_REL_TOL * lam_max;
    let regular = spec.values[n..].iter().filter(|&&l| l > tol).count();
    let m = n - regular;

    let sqrt2 = std::f64::consts::SQRT_2;
    let mut modes: Vec<Mode> = (n + m..dim)
        .map(|idx| {
            let v = spec.vectors.column(idx);
            Mode { u: v.map(|z| z.im * sqrt2), w: v.map(|z| z.re * sqrt2), eps: spec.values[idx] }
        })
        .collect();

    if m > 0 {
        // real orthonormal basis of the near-null invariant subspace
        let cols: Vec<DVector<f64>> = (n - m..n + m)
            .flat_map(|idx| {
                let v = spec.vectors.column(idx);
                [v.map(|z| z.re), v.map(|z| z.im)]
            })
            .collect();
        let span = DMatrix::from_columns(&cols);
        let svd = span.svd(true, false);
        let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
        order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
        let u_full = svd.u.expect("left singular vectors requested");
        let q_cols: Vec<DVector<f64>> = order[..2 * m].iter().map(|&i| u_full.column(i).into_owned()).collect();
        let q = DMatrix::from_columns(&q_cols);
        let b = q.transpose() * a * &q;
        let b = (&b - b.transpose()) * 0.5;
        for sub in canonical_modes(&b) {
            modes.push(Mode { u: &q * sub.u, w: &q * sub.w, eps: sub.eps });
        }
    }
    modes.sort_by(|x, y| x.eps.total_cmp(&y.eps));
    modes
}

/// Schur form with ascending non-negative `ε`. When the lowest `ε` is too
/// small to carry a numerically meaningful sign, the orientation of that mode
/// is fixed so that `sgn Pf(A) = sgn det(R) · (−1)^{n(n−1)/2}`, making the
/// ground-state fermion parity exact.
pub fn schur_antisymmetric(a: &DMatrix<f64>) -> Result<SchurForm> {
    if !a.is_square() || !a.nrows().is_multiple_of(2) {
        return Err(Error::InvalidSpec(format!("need an even square matrix, got {}x{}", a.nrows(), a.ncols())));
    }
    let asym = (a + a.transpose()).amax();
    if asym >= 1e-12 * a.amax().max(1.0) {
        return Err(Error::NotAntisymmetric(asym));
    }
    let n = a.nrows() / 2;
    let mut modes = canonical_modes(a);
    for m in modes.iter_mut() {
        m.eps = m.u.dot(&(a * &m.w));
        if m.eps < 0.0 {
            std::mem::swap(&mut m.u, &mut m.w);
            m.eps = -m.eps;
        }
    }
    modes.sort_by(|x, y| x.eps.total_cmp(&y.eps));

    let build = |modes: &[Mode]| {
        let mut r = DMatrix::zeros(2 * n, 2 * n);
        for (k, m) in modes.iter().enumerate() {
            r.set_row(k, &m.u.transpose());
            r.set_row(n + k, &m.w.transpose());
        }
        r
    };
    let mut r = build(&modes);

    if n > 0 && modes[0].eps < ORIENT_REL_TOL * a.amax() {
        let pf = pfaffian_sign(a);
        if pf != 0 {
            let det = r.clone().determinant();
            let block_sign = if (n * (n - 1) / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
            let wanted = pf as f64 * det.signum() * block_sign;
            if wanted < 0.0 {
                let m0 = &mut modes[0];
                std::mem::swap(&mut m0.u, &mut m0.w);
                r = build(&modes);
            }
        }
        modes[0].eps = modes[0].u.dot(&(a * &modes[0].w)).abs();
    }

    Ok(SchurForm { r, eps: modes.iter().map(|m| m.eps).collect() })
}
