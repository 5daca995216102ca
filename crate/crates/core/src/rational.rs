//! Exact rational scalars.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; zero is `0/1`. Its `Display` form (`"p"` or `"p/q"`)
//! is the canonical text encoding.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer `p` as a [`Rational`].
pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Exact product of a slice; the empty product is one.
pub fn product(values: &[Rational]) -> Rational {
    values.iter().fold(Rational::one(), |acc, v| acc * v)
}

/// Nearest `f64`. Falls back to zero only for values that do not fit at all.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(0.0)
}

/// Exact rational value of a finite `f64`.
pub fn from_f64(value: f64) -> Option<Rational> {
    Rational::from_float(value)
}

/// `+1` or `-1` as a rational; zero maps to zero.
pub fn signum(value: &Rational) -> Rational {
    if value.is_zero() {
        Rational::zero()
    } else {
        value.signum()
    }
}
