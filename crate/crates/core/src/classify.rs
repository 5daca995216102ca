//! Decides whether a rational Jacobian preserves the Berwald-Moór metric.
//!
//! A linear change `ỹ = J y` preserves `y^1 ... y^n` iff
//!
//! 1. `perm(J) = Σ_{τ ∈ S_n} J[1][τ(1)] ... J[n][τ(n)] = 1`, and
//! 2. `J[1][k_1] ... J[n][k_n] = 0` for every column tuple `(k_1, ..., k_n)`
//!    with a repeated index.
//!
//! Both sums are enumerated exactly. The search walks column tuples in
//! lexicographic order and skips zero entries, which visits the same nonzero
//! products as the full `n^n` enumeration (so the reported witness is the
//! lexicographically first one) without touching the zero ones.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::affine::AffineSymmetry;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::monomial::ScaledPerm;
use crate::perm::Permutation;
use crate::rational::{self, Rational};
use crate::sample;

/// Default largest dimension the enumerations accept.
pub const DEFAULT_MAX_N: usize = 8;

/// A concrete violated equation of the invariance system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Column tuple (1-based) with a repeat whose entry product is nonzero.
    DegenerateTuple { tuple: Vec<usize>, product: Rational },
    /// The permanent differs from one.
    PermanentMismatch { value: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvarianceReport {
    /// The matrix is `P_σ(a)` with `Π a_i = 1`.
    Symmetry(ScaledPerm),
    Violation(Witness),
}

impl InvarianceReport {
    pub fn is_symmetry(&self) -> bool {
        matches!(self, InvarianceReport::Symmetry(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineVerdict {
    Symmetry(AffineSymmetry),
    Violation(Witness),
}

/// Counts from [`Classifier::theorem_oracle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleReport {
    pub n: usize,
    pub trials: u64,
    pub positives_passed: u64,
    pub perturbed_rejected: u64,
    pub seed: u64,
}

/// Outcome of a single oracle trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialOutcome {
    /// The sampled symmetry was accepted and recovered exactly.
    pub positive_passed: bool,
    /// The perturbed matrix was rejected with a witness that re-checks.
    pub perturbed_rejected: bool,
}

/// Enumeration front-end with a dimension cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classifier {
    max_n: usize,
}

impl Default for Classifier {
    fn default() -> Self {
        Classifier {
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl Classifier {
    pub fn new(max_n: usize) -> Self {
        Classifier { max_n }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    fn check_cap(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::DimensionCapExceeded { n, cap: self.max_n });
        }
        Ok(())
    }

    /// Exact permanent.
    pub fn permanent(&self, j: &DenseMatrix) -> Result<Rational> {
        self.check_cap(j.n())?;
        Ok(permanent_unbounded(j))
    }

    /// `None` when every degenerate column tuple has a zero product, else the
    /// lexicographically first offending tuple.
    pub fn degenerate_products_zero(&self, j: &DenseMatrix) -> Result<Option<Witness>> {
        self.check_cap(j.n())?;
        Ok(first_degenerate(j))
    }

    /// Checks the permanent equation, then the degenerate-product equations.
    pub fn check(&self, j: &DenseMatrix) -> Result<InvarianceReport> {
        let n = j.n();
        if n < 2 {
            return Err(Error::DimensionTooSmall { n, min: 2 });
        }
        self.check_cap(n)?;
        let value = permanent_unbounded(j);
        if !value.is_one() {
            return Ok(InvarianceReport::Violation(Witness::PermanentMismatch {
                value,
            }));
        }
        if let Some(w) = first_degenerate(j) {
            return Ok(InvarianceReport::Violation(w));
        }
        // Permanent 1 with all degenerate products zero forces a monomial
        // pattern whose single surviving term is the scale product.
        let (sigma, scale) = extract_pattern(j).expect("system solution is monomial");
        let p = ScaledPerm::new(sigma, scale).expect("scale product equals the permanent");
        Ok(InvarianceReport::Symmetry(p))
    }

    /// [`Classifier::check`] on the linear part, carrying `translation` along.
    pub fn classify_affine(&self, j: &DenseMatrix, translation: &[Rational]) -> Result<AffineVerdict> {
        if translation.len() != j.n() {
            return Err(Error::DimensionMismatch {
                expected: j.n(),
                found: translation.len(),
            });
        }
        Ok(match self.check(j)? {
            InvarianceReport::Symmetry(p) => {
                AffineVerdict::Symmetry(AffineSymmetry::new(p, translation.to_vec())?)
            }
            InvarianceReport::Violation(w) => AffineVerdict::Violation(w),
        })
    }

    /// One randomized soundness/completeness trial; depends only on
    /// `(n, seed, index)`.
    pub fn oracle_trial(&self, n: usize, seed: u64, index: u64) -> Result<TrialOutcome> {
        if n < 2 {
            return Err(Error::DimensionTooSmall { n, min: 2 });
        }
        self.check_cap(n)?;
        let mut rng = sample::trial_rng(seed, index);
        let p = sample::scaled_perm(&mut rng, n);
        let positive_passed = matches!(
            self.check(&p.to_dense())?,
            InvarianceReport::Symmetry(ref q) if *q == p
        );
        let m = sample::perturbed(&mut rng, &p);
        let perturbed_rejected = match self.check(&m)? {
            InvarianceReport::Violation(w) => verify_witness(&m, &w),
            InvarianceReport::Symmetry(_) => false,
        };
        Ok(TrialOutcome {
            positive_passed,
            perturbed_rejected,
        })
    }

    /// Samples `trials` symmetries and perturbed non-symmetries and counts
    /// how many are classified correctly.
    pub fn theorem_oracle(&self, n: usize, trials: u64, seed: u64) -> Result<OracleReport> {
        if trials == 0 {
            return Err(Error::InvalidTrials);
        }
        let mut report = OracleReport {
            n,
            trials,
            positives_passed: 0,
            perturbed_rejected: 0,
            seed,
        };
        for index in 0..trials {
            let t = self.oracle_trial(n, seed, index)?;
            report.positives_passed += u64::from(t.positive_passed);
            report.perturbed_rejected += u64::from(t.perturbed_rejected);
        }
        Ok(report)
    }
}

fn permanent_unbounded(j: &DenseMatrix) -> Rational {
    fn walk(j: &DenseMatrix, row: usize, used: &mut [bool], acc: &Rational, total: &mut Rational) {
        if row == j.n() {
            *total += acc;
            return;
        }
        for col in 0..j.n() {
            let entry = j.get(row, col);
            if used[col] || entry.is_zero() {
                continue;
            }
            used[col] = true;
            walk(j, row + 1, used, &(acc * entry), total);
            used[col] = false;
        }
    }
    let mut total = Rational::zero();
    walk(j, 0, &mut vec![false; j.n()], &Rational::one(), &mut total);
    total
}

fn first_degenerate(j: &DenseMatrix) -> Option<Witness> {
    let n = j.n();
    // A zero row kills every product.
    if (0..n).any(|i| j.row(i).iter().all(Zero::is_zero)) {
        return None;
    }
    // Every prefix through nonzero entries now extends to a full tuple, so the
    // walk reaches at most n! injective leaves before a repeat shows up.
    fn walk(j: &DenseMatrix, row: usize, counts: &mut [usize], repeated: bool, tuple: &mut Vec<usize>) -> bool {
        if row == j.n() {
            return repeated;
        }
        for col in 0..j.n() {
            if j.get(row, col).is_zero() {
                continue;
            }
            counts[col] += 1;
            tuple.push(col);
            if walk(j, row + 1, counts, repeated || counts[col] > 1, tuple) {
                return true;
            }
            tuple.pop();
            counts[col] -= 1;
        }
        false
    }
    let mut tuple = Vec::with_capacity(n);
    if walk(j, 0, &mut vec![0; n], false, &mut tuple) {
        let product = tuple
            .iter()
            .enumerate()
            .fold(Rational::one(), |acc, (i, &k)| acc * j.get(i, k));
        Some(Witness::DegenerateTuple {
            tuple: tuple.into_iter().map(|k| k + 1).collect(),
            product,
        })
    } else {
        None
    }
}

/// Reads `(σ, a)` off a matrix with exactly one nonzero per row and column.
/// Does not check `Π a_i = 1`.
pub fn extract_pattern(j: &DenseMatrix) -> Result<(Permutation, Vec<Rational>)> {
    let n = j.n();
    let mut image = Vec::with_capacity(n);
    let mut scale = Vec::with_capacity(n);
    let mut taken = vec![false; n];
    for i in 0..n {
        let mut nonzero = j.row(i).iter().enumerate().filter(|(_, v)| !v.is_zero());
        let (col, value) = match (nonzero.next(), nonzero.next()) {
            (Some(hit), None) => hit,
            _ => return Err(Error::NotMonomial { row: i + 1 }),
        };
        if taken[col] {
            return Err(Error::NotMonomial { row: i + 1 });
        }
        taken[col] = true;
        image.push(col);
        scale.push(value.clone());
    }
    let sigma = Permutation::from_zero_based(image).expect("distinct columns");
    Ok((sigma, scale))
}

/// True iff `x · E_σ` is diagonal (every `e_i` is an eigenvector) with
/// determinant 1; equivalently `x = P_{σ^{-1}}(a)` with `Π a_i = 1`.
pub fn membership_test(x: &DenseMatrix, sigma: &Permutation) -> Result<bool> {
    if x.n() != sigma.len() {
        return Err(Error::DimensionMismatch {
            expected: x.n(),
            found: sigma.len(),
        });
    }
    let e_sigma = ScaledPerm::permutation_matrix(sigma.clone()).to_dense();
    let product = x.mul(&e_sigma)?;
    // the determinant of a diagonal matrix is its diagonal product
    Ok(product.is_diagonal() && rational::product(&product.diagonal()).is_one())
}

/// Re-evaluates `witness` against `j`: true iff it names a genuinely
/// violated equation with the stated value.
pub fn verify_witness(j: &DenseMatrix, witness: &Witness) -> bool {
    let n = j.n();
    match witness {
        Witness::DegenerateTuple { tuple, product } => {
            if tuple.len() != n || tuple.iter().any(|&k| k == 0 || k > n) {
                return false;
            }
            let mut seen = vec![false; n];
            let repeated = tuple.iter().any(|&k| core::mem::replace(&mut seen[k - 1], true));
            let actual = tuple
                .iter()
                .enumerate()
                .fold(Rational::one(), |acc, (i, &k)| acc * j.get(i, k - 1));
            repeated && !actual.is_zero() && actual == *product
        }
        Witness::PermanentMismatch { value } => {
            !value.is_one() && permanent_unbounded(j) == *value
        }
    }
}
