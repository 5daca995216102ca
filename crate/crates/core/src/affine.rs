//! Affine symmetries `X̃ = P_σ(a) · X + X_0`.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::monomial::ScaledPerm;
use crate::rational::Rational;

/// One element of the affine symmetry group: a [`ScaledPerm`] followed by an
/// unconstrained rational translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSymmetry {
    linear: ScaledPerm,
    translation: Vec<Rational>,
}

impl AffineSymmetry {
    pub fn new(linear: ScaledPerm, translation: Vec<Rational>) -> Result<Self> {
        if translation.len() != linear.n() {
            return Err(Error::DimensionMismatch {
                expected: linear.n(),
                found: translation.len(),
            });
        }
        Ok(AffineSymmetry {
            linear,
            translation,
        })
    }

    /// Homogeneous element (zero translation).
    pub fn linear(linear: ScaledPerm) -> Self {
        let n = linear.n();
        AffineSymmetry {
            linear,
            translation: (0..n).map(|_| Rational::zero()).collect(),
        }
    }

    /// Pure translation `X ↦ X + v`.
    pub fn translation(v: Vec<Rational>) -> Self {
        AffineSymmetry {
            linear: ScaledPerm::identity(v.len()),
            translation: v,
        }
    }

    /// The neutral element `X ↦ X`.
    pub fn identity(n: usize) -> Self {
        Self::linear(ScaledPerm::identity(n))
    }

    pub fn n(&self) -> usize {
        self.linear.n()
    }

    pub fn linear_part(&self) -> &ScaledPerm {
        &self.linear
    }

    pub fn translation_part(&self) -> &[Rational] {
        &self.translation
    }

    pub fn into_parts(self) -> (ScaledPerm, Vec<Rational>) {
        (self.linear, self.translation)
    }

    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        let mut out = self.linear.apply(x)?;
        for (o, t) in out.iter_mut().zip(&self.translation) {
            *o += t;
        }
        Ok(out)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &AffineSymmetry) -> Result<AffineSymmetry> {
        let linear = self.linear.compose(&other.linear)?;
        let translation = self.apply(&other.translation)?;
        Ok(AffineSymmetry {
            linear,
            translation,
        })
    }

    pub fn inverse(&self) -> AffineSymmetry {
        let linear = self.linear.inverse();
        let translation = linear
            .apply(&self.translation)
            .expect("inverse has the same dimension")
            .into_iter()
            .map(|v| -v)
            .collect();
        AffineSymmetry {
            linear,
            translation,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.translation.iter().all(Zero::is_zero)
    }
}
