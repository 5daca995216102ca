//! The Berwald-Moór metric `F_n(y) = (y^1 ... y^n)^(1/n)`.

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Exact `F_n(y)^n = y^1 y^2 ... y^n`. Invariance is checked on this form.
pub fn metric_power(y: &[Rational]) -> Rational {
    rational::product(y)
}

/// `F_n(y)` over the reals.
///
/// Odd `n` takes the signed real root; even `n` rejects a negative product.
pub fn metric(y: &[f64]) -> Result<f64> {
    let n = y.len();
    if n < 2 {
        return Err(Error::DimensionTooSmall { n, min: 2 });
    }
    let radicand: f64 = y.iter().product();
    if radicand < 0.0 && n.is_multiple_of(2) {
        return Err(Error::NegativeRadicand);
    }
    let magnitude = real_root(radicand.abs(), n);
    Ok(if radicand < 0.0 { -magnitude } else { magnitude })
}

/// Non-negative `n`-th root of `x >= 0`.
fn real_root(x: f64, n: usize) -> f64 {
    match n {
        2 => libm::sqrt(x),
        3 => libm::cbrt(x),
        _ => {
            if x == 0.0 || !x.is_finite() {
                return x;
            }
            let r = libm::pow(x, 1.0 / n as f64);
            // one Newton step on r^n = x
            let nf = n as f64;
            let rn1 = (1..n).fold(1.0, |acc, _| acc * r);
            let refined = r - (rn1 * r - x) / (nf * rn1);
            if refined.is_finite() && refined > 0.0 {
                refined
            } else {
                r
            }
        }
    }
}
