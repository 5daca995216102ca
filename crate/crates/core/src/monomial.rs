//! Scaled permutation (monomial) matrices `P_σ(a_1, ..., a_n)` with unit
//! scale product.
//!
//! Row `i` carries its single nonzero entry `a_i` in column `σ(i)`. With
//! `(s∘t)(i) = s(t(i))`, the matrix product is
//!
//! ```text
//! P_σ(a) · P_τ(b) = P_{τ∘σ}(a_1 b_σ(1), ..., a_n b_σ(n))
//! P_σ(a)^{-1}     = P_{σ^{-1}}(1/a_σ^{-1}(1), ..., 1/a_σ^{-1}(n))
//! det P_σ(a)      = ε(σ) · Π a_i = ε(σ)
//! ```

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::perm::Permutation;
use crate::rational::{self, Rational};

/// Linear part of a Berwald-Moór symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledPerm {
    sigma: Permutation,
    scale: Vec<Rational>,
}

impl ScaledPerm {
    /// Validated constructor: lengths agree, no zero scale, `Π a_i = 1`.
    pub fn new(sigma: Permutation, scale: Vec<Rational>) -> Result<Self> {
        if sigma.len() != scale.len() {
            return Err(Error::DimensionMismatch {
                expected: sigma.len(),
                found: scale.len(),
            });
        }
        if let Some(i) = scale.iter().position(Zero::is_zero) {
            return Err(Error::ZeroScale { index: i + 1 });
        }
        let product = rational::product(&scale);
        if !product.is_one() {
            return Err(Error::UnitProductViolation { product });
        }
        Ok(ScaledPerm { sigma, scale })
    }

    /// Caller guarantees the invariants (closure of the group operations).
    fn from_parts(sigma: Permutation, scale: Vec<Rational>) -> Self {
        debug_assert!(rational::product(&scale).is_one());
        ScaledPerm { sigma, scale }
    }

    /// `P_e(1, ..., 1) = I_n`.
    pub fn identity(n: usize) -> Self {
        ScaledPerm {
            sigma: Permutation::identity(n),
            scale: (0..n).map(|_| Rational::one()).collect(),
        }
    }

    /// Unscaled permutation matrix `E_σ = P_σ(1, ..., 1)`.
    pub fn permutation_matrix(sigma: Permutation) -> Self {
        let n = sigma.len();
        ScaledPerm {
            sigma,
            scale: (0..n).map(|_| Rational::one()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn scale(&self) -> &[Rational] {
        &self.scale
    }

    pub fn into_parts(self) -> (Permutation, Vec<Rational>) {
        (self.sigma, self.scale)
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.n());
        for (i, a) in self.scale.iter().enumerate() {
            m.set(i, self.sigma.apply(i), a.clone());
        }
        m
    }

    /// The matrix product `self · other`.
    pub fn compose(&self, other: &ScaledPerm) -> Result<ScaledPerm> {
        let sigma = other.sigma.compose(&self.sigma)?;
        let scale = self
            .scale
            .iter()
            .enumerate()
            .map(|(i, a)| a * &other.scale[self.sigma.apply(i)])
            .collect();
        Ok(Self::from_parts(sigma, scale))
    }

    pub fn inverse(&self) -> ScaledPerm {
        let sigma = self.sigma.inverse();
        let scale = (0..self.n())
            .map(|i| self.scale[sigma.apply(i)].recip())
            .collect();
        Self::from_parts(sigma, scale)
    }

    /// `ε(σ)` as a rational.
    pub fn det(&self) -> Rational {
        rational::int(i64::from(self.sigma.sign()))
    }

    /// `ỹ^i = a_i y^σ(i)`.
    pub fn apply(&self, y: &[Rational]) -> Result<Vec<Rational>> {
        if y.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: y.len(),
            });
        }
        Ok(self
            .scale
            .iter()
            .enumerate()
            .map(|(i, a)| a * &y[self.sigma.apply(i)])
            .collect())
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.is_identity() && self.scale.iter().all(One::is_one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use alloc::vec;

    fn sp(sigma: &[usize], scale: Vec<Rational>) -> ScaledPerm {
        ScaledPerm::new(Permutation::from_one_based(sigma).unwrap(), scale).unwrap()
    }

    fn worked() -> ScaledPerm {
        sp(&[2, 3, 1], vec![int(2), int(3), rat(1, 6)])
    }

    fn dense(rows: &[&[Rational]]) -> DenseMatrix {
        DenseMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn construction_checks() {
        let _ = worked();
        assert!(ScaledPerm::identity(4).is_identity());
        assert_eq!(
            ScaledPerm::new(Permutation::from_one_based(&[2, 1]).unwrap(), vec![int(2), int(2)]),
            Err(Error::UnitProductViolation { product: int(4) })
        );
        assert_eq!(
            ScaledPerm::new(Permutation::identity(2), vec![int(0), int(1)]),
            Err(Error::ZeroScale { index: 1 })
        );
        assert!(matches!(
            ScaledPerm::new(Permutation::identity(2), vec![int(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn dense_placement() {
        let z = int(0);
        assert_eq!(
            worked().to_dense(),
            dense(&[
                &[z.clone(), int(2), z.clone()],
                &[z.clone(), z.clone(), int(3)],
                &[rat(1, 6), z.clone(), z.clone()]
            ])
        );
        assert_eq!(ScaledPerm::identity(3).to_dense(), DenseMatrix::identity(3));
        assert_eq!(
            sp(&[2, 1], vec![int(3), rat(1, 3)]).to_dense(),
            dense(&[&[z.clone(), int(3)], &[rat(1, 3), z]])
        );
    }

    #[test]
    fn compose_worked_example() {
        let q = sp(&[2, 1, 3], vec![rat(1, 2), int(2), int(1)]);
        let pq = worked().compose(&q).unwrap();
        assert_eq!(pq.sigma().to_one_based(), vec![1, 3, 2]);
        assert_eq!(pq.scale(), &[int(4), int(3), rat(1, 12)]);
        assert_eq!(pq.to_dense(), worked().to_dense().mul(&q.to_dense()).unwrap());
        assert_eq!(worked().compose(&ScaledPerm::identity(3)).unwrap(), worked());
        assert!(worked().compose(&worked().inverse()).unwrap().is_identity());
        assert!(worked().compose(&ScaledPerm::identity(2)).is_err());
    }

    #[test]
    fn inverse_worked_example() {
        let inv = worked().inverse();
        assert_eq!(inv.sigma().to_one_based(), vec![3, 1, 2]);
        assert_eq!(inv.scale(), &[int(6), rat(1, 2), rat(1, 3)]);
        assert_eq!(inv.inverse(), worked());
        assert!(ScaledPerm::identity(3).inverse().is_identity());
    }

    #[test]
    fn determinant_is_signature() {
        assert_eq!(sp(&[2, 1, 3], vec![int(2), rat(1, 2), int(1)]).det(), int(-1));
        assert_eq!(ScaledPerm::identity(3).det(), int(1));
        assert_eq!(worked().det(), int(1));
        assert_eq!(worked().to_dense().cofactor_det(), int(1));
    }

    #[test]
    fn linear_action() {
        assert_eq!(
            worked().apply(&[int(1), int(2), int(4)]).unwrap(),
            vec![int(4), int(12), rat(1, 6)]
        );
        let y = vec![rat(-3, 7), int(5)];
        assert_eq!(ScaledPerm::identity(2).apply(&y).unwrap(), y);
        assert_eq!(
            sp(&[2, 1], vec![int(3), rat(1, 3)]).apply(&[int(1), int(1)]).unwrap(),
            vec![int(3), rat(1, 3)]
        );
        assert!(worked().apply(&[int(1)]).is_err());
    }

    #[test]
    fn non_abelian_witness() {
        let s = ScaledPerm::permutation_matrix(Permutation::from_one_based(&[2, 1, 3]).unwrap());
        let t = ScaledPerm::permutation_matrix(Permutation::from_one_based(&[1, 3, 2]).unwrap());
        let st = s.compose(&t).unwrap();
        let ts = t.compose(&s).unwrap();
        assert_eq!(st.sigma().to_one_based(), vec![3, 1, 2]);
        assert_eq!(ts.sigma().to_one_based(), vec![2, 3, 1]);
        assert_ne!(st, ts);
    }
}
