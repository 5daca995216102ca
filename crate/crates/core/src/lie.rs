//! The commutative Lie group `D_n^1` of determinant-one diagonal matrices and
//! its Lie algebra `d_n^1` of traceless diagonals.
//!
//! Everything is generic over a [`LieScalar`]: `f64` for the exponential and
//! logarithm, [`Rational`] where the group law should be exact. Rational
//! elements embed losslessly into [`ScaledPerm`] with the identity
//! permutation.
//!
//! Basis of `d_n^1`: `E_i = diag(0, ..., 1 (at i), ..., 0, -1)` for
//! `i = 1..n-1`, so the algebra has dimension `n - 1`.

use alloc::vec::Vec;
use core::fmt::Debug;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::ScaledPerm;
use crate::perm::Permutation;
use crate::rational::Rational;

/// Tolerance for the floating-point unit-product and zero-trace checks.
pub const TOLERANCE: f64 = 1e-12;

/// Field operations plus the two approximate predicates the group needs.
pub trait LieScalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// `Π a_i == 1`, exactly or within [`TOLERANCE`].
    fn is_unit_product(product: &Self) -> bool;
    /// `trace == 0` relative to `magnitude = Σ |t_i|`.
    fn is_zero_trace(trace: &Self, magnitude: &Self) -> bool;
    fn magnitude(&self) -> Self;
    fn is_negative(&self) -> bool;
}

impl LieScalar for f64 {
    fn is_unit_product(product: &f64) -> bool {
        (product - 1.0).abs() <= TOLERANCE
    }
    fn is_zero_trace(trace: &f64, magnitude: &f64) -> bool {
        trace.abs() <= TOLERANCE * magnitude.max(1.0)
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn is_negative(&self) -> bool {
        *self < 0.0
    }
}

impl LieScalar for Rational {
    fn is_unit_product(product: &Rational) -> bool {
        product.is_one()
    }
    fn is_zero_trace(trace: &Rational, _magnitude: &Rational) -> bool {
        trace.is_zero()
    }
    fn magnitude(&self) -> Rational {
        self.abs()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

fn product<T: LieScalar>(v: &[T]) -> T {
    v.iter().cloned().fold(T::one(), |acc, x| acc * x)
}

fn sum<T: LieScalar>(v: &[T]) -> T {
    v.iter().cloned().fold(T::zero(), |acc, x| acc + x)
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::DimensionTooSmall { n, min: 2 });
    }
    Ok(())
}

fn check_same(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch {
            expected: a,
            found: b,
        });
    }
    Ok(())
}

/// `diag(a_1, ..., a_n)` with `Π a_i = 1` and no zero entry.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalGroupElement<T = f64> {
    diag: Vec<T>,
}

impl<T: LieScalar> DiagonalGroupElement<T> {
    pub fn new(diag: Vec<T>) -> Result<Self> {
        check_n(diag.len())?;
        if let Some(i) = diag.iter().position(Zero::is_zero) {
            return Err(Error::ZeroCoordinate { index: i + 1 });
        }
        if !T::is_unit_product(&product(&diag)) {
            return Err(Error::NotUnitDeterminant);
        }
        Ok(DiagonalGroupElement { diag })
    }

    pub fn identity(n: usize) -> Self {
        DiagonalGroupElement {
            diag: (0..n).map(|_| T::one()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    /// Group product (matrix product of diagonals).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same(self.n(), other.n())?;
        Ok(DiagonalGroupElement {
            diag: self
                .diag
                .iter()
                .zip(&other.diag)
                .map(|(a, b)| a.clone() * b.clone())
                .collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        DiagonalGroupElement {
            diag: self.diag.iter().map(|a| T::one() / a.clone()).collect(),
        }
    }
}

impl DiagonalGroupElement<Rational> {
    /// The same matrix as a [`ScaledPerm`] over the identity permutation.
    pub fn to_scaled_perm(&self) -> ScaledPerm {
        ScaledPerm::new(Permutation::identity(self.n()), self.diag.clone())
            .expect("unit product and nonzero entries are invariants")
    }

    /// Inverse of [`Self::to_scaled_perm`]; `None` off the identity permutation.
    pub fn from_scaled_perm(p: &ScaledPerm) -> Option<Self> {
        if !p.sigma().is_identity() || p.n() < 2 {
            return None;
        }
        Some(DiagonalGroupElement {
            diag: p.scale().to_vec(),
        })
    }

    pub fn to_f64(&self) -> DiagonalGroupElement<f64> {
        DiagonalGroupElement {
            diag: self.diag.iter().map(crate::rational::to_f64).collect(),
        }
    }
}

/// Chart coordinates `(a_1, ..., a_{n-1})`, all nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartPoint<T = f64> {
    coords: Vec<T>,
}

impl<T: LieScalar> ChartPoint<T> {
    pub fn new(coords: Vec<T>) -> Result<Self> {
        check_n(coords.len() + 1)?;
        if let Some(i) = coords.iter().position(Zero::is_zero) {
            return Err(Error::ZeroCoordinate { index: i + 1 });
        }
        Ok(ChartPoint { coords })
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }
}

/// `diag(t_1, ..., t_n)` with `Σ t_i = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct TracelessDiagonal<T = f64> {
    diag: Vec<T>,
}

impl<T: LieScalar> TracelessDiagonal<T> {
    pub fn new(diag: Vec<T>) -> Result<Self> {
        check_n(diag.len())?;
        let magnitude = diag
            .iter()
            .fold(T::zero(), |acc, t| acc + t.magnitude());
        if !T::is_zero_trace(&sum(&diag), &magnitude) {
            return Err(Error::TraceNotZero);
        }
        Ok(TracelessDiagonal { diag })
    }

    pub fn zero(n: usize) -> Self {
        TracelessDiagonal {
            diag: (0..n).map(|_| T::zero()).collect(),
        }
    }

    /// `Σ_i c_i E_i` for coefficients `c_1..c_{n-1}`.
    pub fn from_coefficients(coefficients: &[T]) -> Result<Self> {
        check_n(coefficients.len() + 1)?;
        let mut diag = coefficients.to_vec();
        diag.push(-sum(coefficients));
        Ok(TracelessDiagonal { diag })
    }

    /// Coordinates in the `E_i` basis: the first `n - 1` diagonal entries.
    pub fn coefficients(&self) -> &[T] {
        &self.diag[..self.n() - 1]
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    pub fn scaled(&self, factor: T) -> Self {
        TracelessDiagonal {
            diag: self.diag.iter().map(|t| t.clone() * factor.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(Zero::is_zero)
    }
}

/// Tensor `c^k_{ij}` with `[E_i, E_j] = Σ_k c^k_{ij} E_k`, indices 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants<T = f64> {
    dim: usize,
    data: Vec<T>,
}

impl<T: LieScalar> StructureConstants<T> {
    /// Algebra dimension `n - 1`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

/// `diag(a_1, ..., a_{n-1}, 1 / (a_1 ... a_{n-1}))`.
pub fn dn1_new<T: LieScalar>(first: &[T]) -> Result<DiagonalGroupElement<T>> {
    let point = ChartPoint::new(first.to_vec())?;
    let mut diag = point.coords;
    let last = T::one() / product(&diag);
    diag.push(last);
    Ok(DiagonalGroupElement { diag })
}

/// Drops the last diagonal entry.
pub fn chart<T: LieScalar>(a: &DiagonalGroupElement<T>) -> ChartPoint<T> {
    ChartPoint {
        coords: a.diag[..a.n() - 1].to_vec(),
    }
}

/// `μ(A, B) = A^{-1} B`, componentwise `b_i / a_i`.
pub fn mu<T: LieScalar>(
    a: &DiagonalGroupElement<T>,
    b: &DiagonalGroupElement<T>,
) -> Result<DiagonalGroupElement<T>> {
    check_same(a.n(), b.n())?;
    Ok(DiagonalGroupElement {
        diag: a
            .diag
            .iter()
            .zip(&b.diag)
            .map(|(x, y)| y.clone() / x.clone())
            .collect(),
    })
}

/// Componentwise exponential.
pub fn exp(x: &TracelessDiagonal<f64>) -> DiagonalGroupElement<f64> {
    DiagonalGroupElement {
        diag: x.diag.iter().map(|&t| libm::exp(t)).collect(),
    }
}

/// Componentwise natural logarithm on the all-positive component.
pub fn log(a: &DiagonalGroupElement<f64>) -> Result<TracelessDiagonal<f64>> {
    if let Some(i) = a.diag.iter().position(|&v| v <= 0.0) {
        return Err(Error::NotIdentityComponent { index: i + 1 });
    }
    Ok(TracelessDiagonal {
        diag: a.diag.iter().map(|&v| libm::log(v)).collect(),
    })
}

/// `E_i` for 1-based `i` in `1..=n-1`.
pub fn basis<T: LieScalar>(n: usize, i: usize) -> Result<TracelessDiagonal<T>> {
    check_n(n)?;
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let mut diag: Vec<T> = (0..n).map(|_| T::zero()).collect();
    diag[i - 1] = T::one();
    diag[n - 1] = -T::one();
    Ok(TracelessDiagonal { diag })
}

/// All `n - 1` basis elements in order.
pub fn basis_all<T: LieScalar>(n: usize) -> Result<Vec<TracelessDiagonal<T>>> {
    check_n(n)?;
    (1..n).map(|i| basis(n, i)).collect()
}

fn dense_diag<T: LieScalar>(diag: &[T]) -> Vec<T> {
    let n = diag.len();
    let mut m: Vec<T> = (0..n * n).map(|_| T::zero()).collect();
    for (i, d) in diag.iter().enumerate() {
        m[i * n + i] = d.clone();
    }
    m
}

fn dense_mul<T: LieScalar>(a: &[T], b: &[T], n: usize) -> Vec<T> {
    let mut out: Vec<T> = (0..n * n).map(|_| T::zero()).collect();
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = (0..n).fold(T::zero(), |acc, k| {
                acc + a[i * n + k].clone() * b[k * n + j].clone()
            });
        }
    }
    out
}

/// `[X, Y] = XY - YX`, computed on the dense matrices.
pub fn bracket<T: LieScalar>(
    x: &TracelessDiagonal<T>,
    y: &TracelessDiagonal<T>,
) -> Result<TracelessDiagonal<T>> {
    check_same(x.n(), y.n())?;
    let n = x.n();
    let (dx, dy) = (dense_diag(&x.diag), dense_diag(&y.diag));
    let xy = dense_mul(&dx, &dy, n);
    let yx = dense_mul(&dy, &dx, n);
    let commutator: Vec<T> = xy.into_iter().zip(yx).map(|(p, q)| p - q).collect();
    debug_assert!((0..n).all(|i| (0..n).all(|j| i == j || commutator[i * n + j].is_zero())));
    Ok(TracelessDiagonal {
        diag: (0..n).map(|i| commutator[i * n + i].clone()).collect(),
    })
}

/// Expands every `[E_i, E_j]` in the basis.
pub fn structure_constants<T: LieScalar>(n: usize) -> Result<StructureConstants<T>> {
    let basis = basis_all::<T>(n)?;
    let dim = n - 1;
    let mut data = Vec::with_capacity(dim * dim * dim);
    for ei in &basis {
        for ej in &basis {
            let c = bracket(ei, ej)?;
            let coefficients = c.coefficients().to_vec();
            debug_assert_eq!(TracelessDiagonal::from_coefficients(&coefficients)?, c);
            data.extend(coefficients);
        }
    }
    Ok(StructureConstants { dim, data })
}

/// Sign of each diagonal entry (`+1` / `-1`); the count of `-1` is even.
pub fn component_signature<T: LieScalar>(a: &DiagonalGroupElement<T>) -> Vec<i8> {
    a.diag
        .iter()
        .map(|v| if v.is_negative() { -1 } else { 1 })
        .collect()
}
