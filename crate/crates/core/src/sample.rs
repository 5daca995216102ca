//! Seeded random elements.
//!
//! Every draw comes from a ChaCha8 stream keyed by `(seed, index)`, so a
//! batch of trials gives the same result in any evaluation order.

use alloc::vec::Vec;

use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::affine::AffineSymmetry;
use crate::matrix::DenseMatrix;
use crate::monomial::ScaledPerm;
use crate::perm::Permutation;
use crate::rational::{self, rat, Rational};

/// Independent generator for trial `index` under `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn small_nonzero<R: Rng + ?Sized>(rng: &mut R) -> i64 {
    let v = rng.random_range(1..=9);
    if rng.random_bool(0.5) {
        -v
    } else {
        v
    }
}

/// `p/q` with `p, q ∈ [-9, 9] \ {0}`.
pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rat(small_nonzero(rng), small_nonzero(rng))
}

/// `p/q` with `p ∈ [-9, 9]`, `q ∈ [1, 9]`; may be zero.
pub fn rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rat(rng.random_range(-9..=9), rng.random_range(1..=9))
}

pub fn rational_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| rational(rng)).collect()
}

/// Strictly positive `p/q` with `p, q ∈ [1, 9]`.
pub fn positive_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rat(rng.random_range(1..=9), rng.random_range(1..=9))
}

/// Uniform permutation by shuffle.
pub fn permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    let mut image: Vec<usize> = (0..n).collect();
    image.shuffle(rng);
    Permutation::from_zero_based(image).expect("a shuffle is a bijection")
}

/// Random scales with the last one fixed so that the product is exactly 1.
pub fn unit_product_scales<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    draw: impl Fn(&mut R) -> Rational,
) -> Vec<Rational> {
    if n == 0 {
        return Vec::new();
    }
    let mut scale: Vec<Rational> = (0..n - 1).map(|_| draw(rng)).collect();
    let last = rational::product(&scale).recip();
    scale.push(last);
    debug_assert!(rational::product(&scale).is_one());
    scale
}

pub fn scaled_perm<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ScaledPerm {
    let sigma = permutation(rng, n);
    let scale = unit_product_scales(rng, n, |r| nonzero_rational(r));
    ScaledPerm::new(sigma, scale).expect("unit product by construction")
}

/// Like [`scaled_perm`] but with all scales positive.
pub fn positive_scaled_perm<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ScaledPerm {
    let sigma = permutation(rng, n);
    let scale = unit_product_scales(rng, n, |r| positive_rational(r));
    ScaledPerm::new(sigma, scale).expect("unit product by construction")
}

pub fn affine<R: Rng + ?Sized>(rng: &mut R, n: usize) -> AffineSymmetry {
    let linear = scaled_perm(rng, n);
    AffineSymmetry::new(linear, rational_vector(rng, n)).expect("matching dimension")
}

/// Dense form of `p` with one extra nonzero entry off its pattern.
///
/// Needs `n >= 2`.
pub fn perturbed<R: Rng + ?Sized>(rng: &mut R, p: &ScaledPerm) -> DenseMatrix {
    let n = p.n();
    assert!(n >= 2, "no off-pattern entry exists for n < 2");
    let mut m = p.to_dense();
    let row = rng.random_range(0..n);
    let mut col = rng.random_range(0..n - 1);
    if col >= p.sigma().apply(row) {
        col += 1;
    }
    m.set(row, col, nonzero_rational(rng));
    m
}
