//! Permutations of `{1..n}` in one-line notation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1..n}`.
///
/// Stored 0-based: `image[i] = σ(i+1) - 1`. Use [`Permutation::from_one_based`]
/// and [`Permutation::to_one_based`] at every external boundary.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// The identity of `S_n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds from 0-based images, rejecting anything that is not a bijection.
    pub fn from_zero_based(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &j in &image {
            if j >= n || seen[j] {
                return Err(Error::InvalidPermutation);
            }
            seen[j] = true;
        }
        Ok(Permutation { image })
    }

    /// Builds from one-line notation `[σ(1), ..., σ(n)]`.
    pub fn from_one_based(image: &[usize]) -> Result<Self> {
        let zero_based = image
            .iter()
            .map(|&j| j.checked_sub(1).ok_or(Error::InvalidPermutation))
            .collect::<Result<Vec<_>>>()?;
        Self::from_zero_based(zero_based)
    }

    /// One-line notation `[σ(1), ..., σ(n)]`.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.image.iter().map(|&j| j + 1).collect()
    }

    /// 0-based images.
    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    /// Degree `n`.
    pub fn len(&self) -> usize {
        self.image.len()
    }

    /// True for the empty permutation of `{}`.
    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// 0-based evaluation `σ(i)`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Permutation {
            image: other.image.iter().map(|&j| self.image[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (i, &j) in self.image.iter().enumerate() {
            image[j] = i;
        }
        Permutation { image }
    }

    /// Disjoint cycles (0-based), fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.image[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Signature `ε(σ) = (-1)^(n - #cycles)`.
    pub fn sign(&self) -> i32 {
        if (self.len() - self.cycles().len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_one_based()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_based(v).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(p(&[2, 1, 3]).compose(&p(&[1, 3, 2])).unwrap(), p(&[2, 3, 1]));
        assert_eq!(
            Permutation::identity(3).compose(&p(&[3, 1, 2])).unwrap(),
            p(&[3, 1, 2])
        );
        assert!(p(&[2, 3, 1]).compose(&p(&[3, 1, 2])).unwrap().is_identity());
    }

    #[test]
    fn compose_dimension_mismatch() {
        assert_eq!(
            p(&[1, 2]).compose(&p(&[1, 2, 3])),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        assert_eq!(p(&[2, 1, 3]).sign(), -1);
        assert_eq!(p(&[2, 3, 1]).sign(), 1);
        assert_eq!(p(&[4, 3, 2, 1]).sign(), 1);
        assert_eq!(p(&[2, 3, 4, 1]).sign(), -1);
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(Permutation::from_one_based(&[1, 1, 3]), Err(Error::InvalidPermutation));
        assert_eq!(Permutation::from_one_based(&[0, 1]), Err(Error::InvalidPermutation));
        assert_eq!(Permutation::from_one_based(&[1, 4, 2]), Err(Error::InvalidPermutation));
    }

    #[test]
    fn inverse_undoes() {
        let s = p(&[3, 1, 4, 2]);
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
        assert!(s.inverse().compose(&s).unwrap().is_identity());
        assert_eq!(p(&[2, 3, 1]).inverse(), p(&[3, 1, 2]));
    }
}
