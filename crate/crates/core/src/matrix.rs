//! Dense square matrices over the rationals.
//!
//! This is the reference form every structured operation is checked
//! against, so it is deliberately plain: row-major storage, schoolbook
//! product, Laplace-expansion determinant.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `n × n` rational matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix {
            n,
            entries: (0..n * n).map(|_| Rational::zero()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds from rows; fails with [`Error::NotSquare`] unless there are
    /// `n` rows of length `n`.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(DenseMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.n.max(1)).map(<[Rational]>::to_vec).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-based entry `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn mul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        self.check_dim(other.n)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `M · v`.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_dim(v.len())?;
        Ok((0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Determinant by cofactor expansion along the first row. `O(n!)`; meant
    /// as an oracle for small `n`.
    pub fn cofactor_det(&self) -> Rational {
        let cols: Vec<usize> = (0..self.n).collect();
        self.minor_det(0, &cols)
    }

    fn minor_det(&self, row: usize, cols: &[usize]) -> Rational {
        if cols.is_empty() {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        for (pos, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a * self.minor_det(row + 1, &rest);
            if pos % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    /// True when every off-diagonal entry is zero, i.e. every standard basis
    /// vector is an eigenvector.
    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<alloc::string::String>> = (0..self.n)
            .map(|i| self.row(i).iter().map(|r| alloc::format!("{r}")).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use alloc::vec;

    fn m(rows: &[&[i64]]) -> DenseMatrix {
        DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn not_square() {
        assert_eq!(
            DenseMatrix::from_rows(vec![vec![int(1), int(2)]]),
            Err(Error::NotSquare)
        );
    }

    #[test]
    fn determinant_by_cofactors() {
        assert_eq!(m(&[&[1, 2], &[3, 4]]).cofactor_det(), int(-2));
        assert_eq!(m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]).cofactor_det(), int(0));
        assert_eq!(m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).cofactor_det(), int(6));
        assert_eq!(m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]).cofactor_det(), int(-1));
        assert_eq!(DenseMatrix::identity(5).cofactor_det(), int(1));
        assert_eq!(DenseMatrix::zeros(0).cofactor_det(), int(1));
    }

    #[test]
    fn product_and_action() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), m(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.mul_vec(&[int(1), rat(1, 2)]).unwrap(), vec![int(2), int(5)]);
        assert!(a.mul(&DenseMatrix::identity(3)).is_err());
    }

    #[test]
    fn diagonal_detection() {
        assert!(DenseMatrix::identity(3).is_diagonal());
        assert!(!m(&[&[1, 1], &[0, 1]]).is_diagonal());
    }
}
