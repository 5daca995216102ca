//! Exact symmetry group of the n-dimensional Berwald-Moór metric
//! `F_n(y) = (y^1 y^2 ... y^n)^(1/n)`.
//!
//! For `n >= 3` the linear coordinate changes preserving `F_n` are exactly the
//! scaled permutation matrices `P_σ(a_1, ..., a_n)` (entry `a_i` at `(i, σ(i))`,
//! all other entries zero) with `a_1 a_2 ... a_n = 1`; adding an arbitrary
//! translation gives the full affine symmetry group. This crate provides:
//!
//! - [`Permutation`], [`ScaledPerm`] and [`AffineSymmetry`] with exact
//!   rational group operations,
//! - the metric itself ([`metric`], [`metric_power`]),
//! - the diagonal Lie group `D_n^1` and its traceless Lie algebra ([`lie`]),
//! - a classifier that decides metric invariance of an arbitrary rational
//!   Jacobian from the permanent / degenerate-product system ([`classify`]).
//!
//! The crate is `no_std` and only needs `alloc`. External surfaces use
//! 1-based indices; storage is 0-based.
#![no_std]

extern crate alloc;

pub mod affine;
pub mod classify;
pub mod error;
pub mod lie;
pub mod matrix;
pub mod metric;
pub mod monomial;
pub mod perm;
pub mod rational;
pub mod sample;

pub use affine::AffineSymmetry;
pub use classify::{
    extract_pattern, membership_test, verify_witness, AffineVerdict, Classifier, InvarianceReport,
    OracleReport, Witness,
};
pub use error::{Error, Result};
pub use matrix::DenseMatrix;
pub use metric::{metric, metric_power};
pub use monomial::ScaledPerm;
pub use perm::Permutation;
pub use rational::Rational;
