//! Least squares for the small regressions used by the unit-root tests
//! (at most a dozen regressors), solved through Cholesky normal equations.

/// Result of an ordinary least-squares fit without intercept handling;
/// callers pass whatever columns they want, intercepts included.
#[derive(Debug, Clone)]
pub struct OlsFit {
    pub coef: Vec<f64>,
    /// Standard error per coefficient (sigma^2 * (X'X)^-1 diagonal).
    pub se: Vec<f64>,
    pub rss: f64,
    pub n: usize,
    pub k: usize,
}

impl OlsFit {
    /// t-ratio of coefficient `j`; None when its standard error is zero.
    pub fn t_ratio(&self, j: usize) -> Option<f64> {
        if self.se[j] > 0.0 {
            Some(self.coef[j] / self.se[j])
        } else {
            None
        }
    }

    /// Gaussian log-likelihood at the ML variance estimate rss/n.
    pub fn log_likelihood(&self) -> f64 {
        let n = self.n as f64;
        let sigma2 = (self.rss / n).max(1e-300);
        -0.5 * n * ((2.0 * std::f64::consts::PI * sigma2).ln() + 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum OlsError {
    #[error("design matrix is singular or numerically rank deficient")]
    Singular,
    #[error("regression needs more observations than regressors")]
    TooFewObservations,
}

/// Fit y on the given columns. All columns must have the same length as y.
pub fn ols(y: &[f64], cols: &[&[f64]]) -> Result<OlsFit, OlsError> {
    let n = y.len();
    let k = cols.len();
    assert!(k > 0, "ols: no regressors");
    assert!(cols.iter().all(|c| c.len() == n), "ols: ragged columns");
    if n <= k {
        return Err(OlsError::TooFewObservations);
    }

    // Normal equations.
    let mut xtx = vec![0.0; k * k];
    let mut xty = vec![0.0; k];
    for i in 0..k {
        for j in i..k {
            let mut s = 0.0;
            for t in 0..n {
                s += cols[i][t] * cols[j][t];
            }
            xtx[i * k + j] = s;
            xtx[j * k + i] = s;
        }
        let mut s = 0.0;
        for t in 0..n {
            s += cols[i][t] * y[t];
        }
        xty[i] = s;
    }

    let chol = cholesky(&xtx, k).ok_or(OlsError::Singular)?;
    let coef = chol_solve(&chol, k, &xty);

    // Residual sum of squares from an explicit residual pass.
    let mut rss = 0.0;
    for t in 0..n {
        let mut fit = 0.0;
        for j in 0..k {
            fit += coef[j] * cols[j][t];
        }
        let e = y[t] - fit;
        rss += e * e;
    }
    let sigma2 = rss / (n - k) as f64;

    // Diagonal of (X'X)^-1 via ||L^-1 e_j||^2.
    let mut se = vec![0.0; k];
    for (j, se_j) in se.iter_mut().enumerate() {
        let mut e = vec![0.0; k];
        e[j] = 1.0;
        let x = forward_solve(&chol, k, &e);
        let diag: f64 = x.iter().map(|v| v * v).sum();
        *se_j = (sigma2 * diag).sqrt();
    }

    Ok(OlsFit {
        coef,
        se,
        rss,
        n,
        k,
    })
}

// Lower-triangular Cholesky factor of a (row-major, symmetric) matrix.
// Returns None when a pivot falls below a relative floor.
fn cholesky(a: &[f64], k: usize) -> Option<Vec<f64>> {
    let scale = (0..k).map(|i| a[i * k + i].abs()).fold(0.0, f64::max);
    if scale == 0.0 {
        return None;
    }
    let mut l = vec![0.0; k * k];
    for i in 0..k {
        for j in 0..=i {
            let mut s = a[i * k + j];
            for p in 0..j {
                s -= l[i * k + p] * l[j * k + p];
            }
            if i == j {
                if s <= 1e-12 * scale {
                    return None;
                }
                l[i * k + i] = s.sqrt();
            } else {
                l[i * k + j] = s / l[j * k + j];
            }
        }
    }
    Some(l)
}

fn forward_solve(l: &[f64], k: usize, b: &[f64]) -> Vec<f64> {
    let mut x = vec![0.0; k];
    for i in 0..k {
        let mut s = b[i];
        for j in 0..i {
            s -= l[i * k + j] * x[j];
        }
        x[i] = s / l[i * k + i];
    }
    x
}

fn chol_solve(l: &[f64], k: usize, b: &[f64]) -> Vec<f64> {
    let y = forward_solve(l, k, b);
    let mut x = vec![0.0; k];
    for i in (0..k).rev() {
        let mut s = y[i];
        for j in (i + 1)..k {
            s -= l[j * k + i] * x[j];
        }
        x[i] = s / l[i * k + i];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn recovers_exact_linear_model() {
        let x1: Vec<f64> = (0..50).map(|i| i as f64).collect();
        let x2: Vec<f64> = (0..50).map(|i| ((i * 7) % 11) as f64).collect();
        let y: Vec<f64> = (0..50).map(|i| 2.0 * x1[i] - 0.5 * x2[i]).collect();
        let fit = ols(&y, &[&x1, &x2]).unwrap();
        assert_abs_diff_eq!(fit.coef[0], 2.0, epsilon = 1e-10);
        assert_abs_diff_eq!(fit.coef[1], -0.5, epsilon = 1e-10);
        assert!(fit.rss < 1e-18);
    }

    #[test]
    fn collinear_columns_are_singular() {
        let x1 = vec![1.0, 2.0, 3.0, 4.0];
        let x2 = vec![2.0, 4.0, 6.0, 8.0];
        let y = vec![1.0, 0.0, 1.0, 0.0];
        assert!(matches!(ols(&y, &[&x1, &x2]), Err(OlsError::Singular)));
    }

    #[test]
    fn t_ratio_matches_hand_computation() {
        // Single regressor: t = b * sqrt(sum x^2) / s.
        let x = vec![1.0, 2.0, 3.0, 4.0, 5.0];
        let y = vec![1.1, 1.9, 3.2, 3.8, 5.1];
        let fit = ols(&y, &[&x]).unwrap();
        let sxx: f64 = x.iter().map(|v| v * v).sum();
        let b: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>() / sxx;
        let rss: f64 = x.iter().zip(&y).map(|(a, yv)| (yv - b * a).powi(2)).sum();
        let s2 = rss / 4.0;
        let t = b / (s2 / sxx).sqrt();
        assert_abs_diff_eq!(fit.t_ratio(0).unwrap(), t, epsilon = 1e-12);
    }
}
