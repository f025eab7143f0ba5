//! Shared numerical machinery: special functions, bivariate normal CDF,
//! adaptive quadrature, derivative-free optimizers and small-scale OLS.

pub mod bvn;
pub mod ols;
pub mod optim;
pub mod quad;
pub mod special;

/// log(exp(a) + exp(b)) without overflow.
pub fn log_sum_exp2(a: f64, b: f64) -> f64 {
    let m = a.max(b);
    if m == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    m + ((a - m).exp() + (b - m).exp()).ln()
}

/// log(exp(a) + exp(b) - exp(c)); requires the true value to be positive.
pub fn log_sum_exp2_minus(a: f64, b: f64, c: f64) -> f64 {
    let m = a.max(b);
    let s = (a - m).exp() + (b - m).exp() - (c - m).exp();
    m + s.ln()
}
