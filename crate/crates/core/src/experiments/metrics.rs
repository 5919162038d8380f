use crate::error::{Error, Result};

fn check_lengths(x: &[f64], y: &[f64], min: usize) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    if x.len() < min {
        return Err(Error::InsufficientData { needed: min, got: x.len() });
    }
    Ok(())
}

/// `Σ|xᵢ − yᵢ| / m` for measurements `x` and predictions `y`.
pub fn mean_absolute_error(x: &[f64], y: &[f64]) -> Result<f64> {
    check_lengths(x, y, 2)?;
    Ok(x.iter().zip(y).map(|(a, b)| (a - b).abs()).sum::<f64>() / x.len() as f64)
}

/// Coefficient of determination of the least-squares line `x ≈ a + b·y`.
pub fn r_squared(x: &[f64], y: &[f64]) -> Result<f64> {
    check_lengths(x, y, 3)?;
    let m = x.len() as f64;
    let (mx, my) = (x.iter().sum::<f64>() / m, y.iter().sum::<f64>() / m);
    let syy: f64 = y.iter().map(|v| (v - my).powi(2)).sum();
    if syy == 0.0 {
        return Err(Error::ZeroVariance);
    }
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|v| (v - mx).powi(2)).sum();
    let slope = sxy / syy;
    let intercept = mx - slope * my;
    let ss_res: f64 = x.iter().zip(y).map(|(a, b)| (a - intercept - slope * b).powi(2)).sum();
    if ss_res == 0.0 {
        return Ok(1.0);
    }
    Ok(1.0 - ss_res / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_series() {
        let x = [0.1, -0.4, 0.9, 1.3];
        assert_eq!(mean_absolute_error(&x, &x).unwrap(), 0.0);
        assert!((r_squared(&x, &x).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(mean_absolute_error(&[1.0, 2.0], &[0.0, 0.0]).unwrap(), 1.5);
        assert!(matches!(mean_absolute_error(&[1.0], &[1.0]), Err(Error::InsufficientData { .. })));
        assert!(matches!(mean_absolute_error(&[1.0, 2.0], &[1.0]), Err(Error::LengthMismatch(2, 1))));
        assert!(matches!(r_squared(&[1.0, 2.0, 3.0], &[4.0; 3]), Err(Error::ZeroVariance)));
    }

    #[test]
    fn r_squared_of_noisy_line() {
        let y = [0.0, 1.0, 2.0, 3.0];
        let x = [0.1, 0.9, 2.1, 2.9];
        let r2 = r_squared(&x, &y).unwrap();
        assert!(r2 > 0.99 && r2 < 1.0);
    }
}
