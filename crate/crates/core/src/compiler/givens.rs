//! Givens-rotation decomposition of a fermionic Gaussian unitary.
//!
//! Input is an `n × 2n` matrix `M` describing `b_p = Σ_q M_{p,q} a†_q +
//! M_{p,n+q} a_q`. Row operations build a left unitary, column operations
//! produce layers of particle-hole swaps and two-mode rotations, and the left
//! unitary is then reduced to nearest-neighbour rotations on its own.

use nalgebra::{DMatrix, Matrix2};
use num_complex::Complex64;

/// Elements below this magnitude are treated as already eliminated.
pub const ELIMINATION_TOL: f64 = 1e-8;

/// Elementary operation of the decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GivensOp {
    /// Particle-hole swap on the last mode.
    ParticleHole,
    /// Rotation of modes `(i, j)`: `exp(−iθ(YX − XY)/2)` followed by the
    /// phase `diag(1, e^{iφ})` on mode `j`.
    Rotation { i: usize, j: usize, theta: f64, phi: f64 },
}

pub type Layer = Vec<GivensOp>;

#[derive(Debug, Clone, Copy)]
enum Side {
    Left,
    Right,
}

fn is_real(z: Complex64) -> bool {
    z.im.abs() < ELIMINATION_TOL
}

fn givens_matrix_elements(a: Complex64, b: Complex64, side: Side) -> Matrix2<Complex64> {
    let (cosine, sine, phase) = if a.norm() < ELIMINATION_TOL {
        (1.0, 0.0, Complex64::new(1.0, 0.0))
    } else if b.norm() < ELIMINATION_TOL {
        (0.0, 1.0, Complex64::new(1.0, 0.0))
    } else {
        let d = a.norm().hypot(b.norm());
        let phase = (a / a.norm()) * (b / b.norm()).conj();
        (b.norm() / d, a.norm() / d, phase)
    };
    let c = Complex64::new(cosine, 0.0);
    let s = Complex64::new(sine, 0.0);
    let real = is_real(a) && is_real(b);
    match (side, real) {
        (Side::Left, true) => Matrix2::new(c, -phase * s, phase * s, c),
        (Side::Left, false) => Matrix2::new(c, -phase * s, s, phase * c),
        (Side::Right, true) => Matrix2::new(s, phase * c, -phase * c, s),
        (Side::Right, false) => Matrix2::new(s, phase * c, c, -phase * s),
    }
}

fn rotate_rows(m: &mut DMatrix<Complex64>, g: &Matrix2<Complex64>, i: usize, j: usize) {
    for col in 0..m.ncols() {
        let (ri, rj) = (m[(i, col)], m[(j, col)]);
        m[(i, col)] = g[(0, 0)] * ri + g[(0, 1)] * rj;
        m[(j, col)] = g[(1, 0)] * ri + g[(1, 1)] * rj;
    }
}

fn rotate_cols(m: &mut DMatrix<Complex64>, g: &Matrix2<Complex64>, i: usize, j: usize, offset: usize) {
    let (i, j) = (i + offset, j + offset);
    for row in 0..m.nrows() {
        let (ci, cj) = (m[(row, i)], m[(row, j)]);
        m[(row, i)] = g[(0, 0)] * ci + g[(0, 1)].conj() * cj;
        m[(row, j)] = g[(1, 0)] * ci + g[(1, 1)].conj() * cj;
    }
}

fn rotation_angles(g: &Matrix2<Complex64>) -> (f64, f64) {
    (g[(1, 0)].re.clamp(-1.0, 1.0).asin(), g[(1, 1)].arg())
}

/// Decomposes a square unitary into layers of adjacent rotations; returns
/// the layers and the leftover diagonal phases.
pub fn givens_decomposition_square(q: &DMatrix<Complex64>) -> (Vec<Layer>, Vec<Complex64>) {
    let mut m = q.clone();
    let n = m.nrows();
    let mut layers = Vec::new();
    for k in 0..(2 * n).saturating_sub(3) {
        let (start_row, start_col) = if k + 1 < n { (0, n - 1 - k) } else { (k + 2 - n, k + 3 - n) };
        let mut ops = Vec::new();
        for (i, j) in (start_row..).zip((start_col..n).step_by(2)) {
            let right = m[(i, j)].conj();
            if right.norm() > ELIMINATION_TOL {
                let left = m[(i, j - 1)].conj();
                let g = givens_matrix_elements(left, right, Side::Right);
                let (theta, phi) = rotation_angles(&g);
                ops.push(GivensOp::Rotation { i: j - 1, j, theta, phi });
                rotate_cols(&mut m, &g, j - 1, j, 0);
            }
        }
        if !ops.is_empty() {
            layers.push(ops);
        }
    }
    let diag = (0..n).map(|r| m[(r, r)]).collect();
    (layers, diag)
}

/// Output of [`fermionic_gaussian_decomposition`].
#[derive(Debug, Clone)]
pub struct GaussianDecomposition {
    pub layers: Vec<Layer>,
    pub left_layers: Vec<Layer>,
    pub diagonal: Vec<Complex64>,
    pub left_diagonal: Vec<Complex64>,
}

impl GaussianDecomposition {
    /// Layers in circuit order (last elimination applied first).
    pub fn circuit_layers(&self) -> Vec<Layer> {
        self.layers.iter().chain(&self.left_layers).rev().cloned().collect()
    }
}

/// Decomposes an `n × 2n` Bogoliubov row block into particle-hole swaps and
/// two-mode rotations.
pub fn fermionic_gaussian_decomposition(rows: &DMatrix<Complex64>) -> GaussianDecomposition {
    let n = rows.nrows();
    assert_eq!(rows.ncols(), 2 * n, "input must be n x 2n");
    let mut m = rows.clone();
    let mut left_unitary = DMatrix::<Complex64>::identity(n, n);
    for k in 0..n.saturating_sub(1) {
        for l in 0..n - 1 - k {
            if m[(l, k)].norm() > ELIMINATION_TOL {
                let g = givens_matrix_elements(m[(l, k)], m[(l + 1, k)], Side::Left);
                rotate_rows(&mut m, &g, l, l + 1);
                rotate_rows(&mut left_unitary, &g, l, l + 1);
            }
        }
    }

    let mut layers = Vec::new();
    for k in 0..(2 * n).saturating_sub(1) {
        let mut ops = Vec::new();
        if k % 2 == 0 && m[(k / 2, n - 1)].norm() > ELIMINATION_TOL {
            ops.push(GivensOp::ParticleHole);
            m.swap_columns(n - 1, 2 * n - 1);
        }
        let (end_row, end_col) = if k < n { (k, n - 1 - k) } else { (n - 1, k + 1 - n) };
        let cols: Vec<usize> = (end_col..n - 1).step_by(2).collect();
        for (step, &j) in cols.iter().enumerate() {
            let i = end_row - step;
            let left = m[(i, j)].conj();
            if left.norm() > ELIMINATION_TOL {
                let right = m[(i, j + 1)].conj();
                let g = givens_matrix_elements(left, right, Side::Left);
                let (theta, phi) = rotation_angles(&g);
                ops.push(GivensOp::Rotation { i: j, j: j + 1, theta, phi });
                rotate_cols(&mut m, &g, j, j + 1, 0);
                rotate_cols(&mut m, &g.map(|z| z.conj()), j, j + 1, n);
            }
        }
        if !ops.is_empty() {
            layers.push(ops);
        }
    }
    let diagonal: Vec<Complex64> = (0..n).map(|r| m[(r, n + r)]).collect();

    let mut square = left_unitary.transpose();
    for (k, d) in diagonal.iter().enumerate() {
        let dc = d.conj();
        square.column_mut(k).iter_mut().for_each(|z| *z *= dc);
    }
    let (left_layers, left_diagonal) = givens_decomposition_square(&square);
    GaussianDecomposition { layers, left_layers, diagonal, left_diagonal }
}
