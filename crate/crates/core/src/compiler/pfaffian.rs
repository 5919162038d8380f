//! Exact Pfaffian sign of a floating-point antisymmetric matrix.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Sign of `Pf(A)` computed in exact rational arithmetic from the binary
/// values of the entries: `1`, `-1` or `0` for an exactly singular matrix.
pub fn pfaffian_sign(a: &DMatrix<f64>) -> i8 {
    let dim = a.nrows();
    assert!(a.is_square() && dim.is_multiple_of(2), "Pfaffian needs an even square matrix");
    let mut m: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    // antisymmetrize from the upper triangle
                    let x = if i < j { a[(i, j)] } else { -a[(j, i)] };
                    if i == j {
                        BigRational::zero()
                    } else {
                        BigRational::from_float(x).expect("finite entry")
                    }
                })
                .collect()
        })
        .collect();

    let mut sign: i8 = 1;
    for k in (0..dim).step_by(2) {
        let Some(piv) = (k + 1..dim).find(|&j| !m[k][j].is_zero()) else {
            return 0;
        };
        if piv != k + 1 {
            m.swap(k + 1, piv);
            for row in m.iter_mut() {
                row.swap(k + 1, piv);
            }
            sign = -sign;
        }
        let p = m[k][k + 1].clone();
        if p.is_negative() {
            sign = -sign;
        }
        for i in k + 2..dim {
            for j in i + 1..dim {
                let upd = (&m[i][k] * &m[k + 1][j] - &m[i][k + 1] * &m[k][j]) / &p;
                let v = &m[i][j] + upd;
                m[j][i] = -v.clone();
                m[i][j] = v;
            }
        }
    }
    sign
}

/// Exact Pfaffian value as a rational (for tests and small matrices).
pub fn pfaffian_exact(a: &DMatrix<f64>) -> BigRational {
    fn rec(m: &[Vec<BigRational>], idx: &[usize]) -> BigRational {
        if idx.is_empty() {
            return BigRational::from_integer(BigInt::from(1));
        }
        let first = idx[0];
        let mut total = BigRational::zero();
        for (pos, &j) in idx.iter().enumerate().skip(1) {
            let rest: Vec<usize> = idx.iter().enumerate().filter(|&(p, _)| p != 0 && p != pos).map(|(_, &v)| v).collect();
            let term = &m[first][j] * rec(m, &rest);
            if pos % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    let dim = a.nrows();
    let m: Vec<Vec<BigRational>> =
        (0..dim).map(|i| (0..dim).map(|j| BigRational::from_float(a[(i, j)]).expect("finite entry")).collect()).collect();
    rec(&m, &(0..dim).collect::<Vec<_>>())
}
