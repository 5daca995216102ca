use bmsym_core::classify::{InvarianceReport, Witness};
use bmsym_core::lie::{self, DiagonalGroupElement, TracelessDiagonal};
use bmsym_core::rational::{self, Rational};
use bmsym_core::sample::{self, trial_rng};
use bmsym_core::{
    extract_pattern, membership_test, metric, metric_power, verify_witness, AffineSymmetry,
    Classifier, DenseMatrix, ScaledPerm,
};
use num_traits::One;
use proptest::prelude::*;
use rand::Rng;

fn element(seed: u64, n: usize) -> ScaledPerm {
    sample::scaled_perm(&mut trial_rng(seed, 0), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn group_axioms(seed in any::<u64>(), n in 2usize..=7) {
        let mut rng = trial_rng(seed, 1);
        let (p, q, r) = (
            sample::scaled_perm(&mut rng, n),
            sample::scaled_perm(&mut rng, n),
            sample::scaled_perm(&mut rng, n),
        );
        let e = ScaledPerm::identity(n);
        prop_assert_eq!(p.compose(&q).unwrap().compose(&r).unwrap(), p.compose(&q.compose(&r).unwrap()).unwrap());
        prop_assert_eq!(p.compose(&e).unwrap(), p.clone());
        prop_assert_eq!(e.compose(&p).unwrap(), p.clone());
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        prop_assert!(rational::product(p.compose(&q).unwrap().scale()).is_one());
        prop_assert!(rational::product(p.inverse().scale()).is_one());
    }

    #[test]
    fn affine_group_axioms(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = trial_rng(seed, 2);
        let (s, t, u) = (sample::affine(&mut rng, n), sample::affine(&mut rng, n), sample::affine(&mut rng, n));
        prop_assert_eq!(s.compose(&t).unwrap().compose(&u).unwrap(), s.compose(&t.compose(&u).unwrap()).unwrap());
        prop_assert!(s.compose(&s.inverse()).unwrap().is_identity());
        prop_assert!(s.inverse().compose(&s).unwrap().is_identity());
        prop_assert_eq!(s.compose(&AffineSymmetry::identity(n)).unwrap(), s.clone());
        let x = sample::rational_vector(&mut rng, n);
        prop_assert_eq!(
            s.compose(&t).unwrap().apply(&x).unwrap(),
            s.apply(&t.apply(&x).unwrap()).unwrap()
        );
    }

    #[test]
    fn dense_oracle_agrees(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = trial_rng(seed, 3);
        let (p, q) = (sample::scaled_perm(&mut rng, n), sample::scaled_perm(&mut rng, n));
        prop_assert_eq!(p.compose(&q).unwrap().to_dense(), p.to_dense().mul(&q.to_dense()).unwrap());
        prop_assert_eq!(p.inverse().to_dense().mul(&p.to_dense()).unwrap(), DenseMatrix::identity(n));
        prop_assert_eq!(p.det(), Rational::from_integer(p.sigma().sign().into()));
        prop_assert_eq!(p.det(), p.to_dense().cofactor_det());
        let y = sample::rational_vector(&mut rng, n);
        prop_assert_eq!(p.apply(&y).unwrap(), p.to_dense().mul_vec(&y).unwrap());
        prop_assert_eq!(
            p.compose(&q).unwrap().apply(&y).unwrap(),
            p.apply(&q.apply(&y).unwrap()).unwrap()
        );
    }

    #[test]
    fn metric_invariance(seed in any::<u64>(), n in 2usize..=7) {
        let mut rng = trial_rng(seed, 4);
        let s = sample::affine(&mut rng, n);
        let y = sample::rational_vector(&mut rng, n);
        // the fiber law only sees the linear part
        let image = s.linear_part().apply(&y).unwrap();
        prop_assert_eq!(metric_power(&image), metric_power(&y));

        let p = sample::positive_scaled_perm(&mut rng, n);
        let yf: Vec<f64> = (0..n).map(|_| rng.random_range(0.01..100.0)).collect();
        let ya: Vec<Rational> = yf.iter().map(|&v| rational::from_f64(v).unwrap()).collect();
        let image: Vec<f64> = p.apply(&ya).unwrap().iter().map(rational::to_f64).collect();
        let (before, after) = (metric(&yf).unwrap(), metric(&image).unwrap());
        prop_assert!((after - before).abs() <= 1e-12 * before);
    }

    #[test]
    fn soundness(seed in any::<u64>(), n in 2usize..=7) {
        let p = element(seed, n);
        prop_assert_eq!(Classifier::default().check(&p.to_dense()).unwrap(), InvarianceReport::Symmetry(p.clone()));
        prop_assert_eq!(Classifier::default().permanent(&p.to_dense()).unwrap(), Rational::one());
    }

    #[test]
    fn completeness_and_ground_truth(seed in any::<u64>(), n in 2usize..=5) {
        let mut rng = trial_rng(seed, 5);
        let p = sample::scaled_perm(&mut rng, n);
        let m = sample::perturbed(&mut rng, &p);
        let report = Classifier::default().check(&m).unwrap();
        let InvarianceReport::Violation(w) = report else {
            return Err(TestCaseError::fail("perturbed matrix accepted"));
        };
        prop_assert!(verify_witness(&m, &w));
        // a generic y exposes the change of y^1...y^n
        let moved = (0..100).any(|_| {
            let y = sample::rational_vector(&mut rng, n);
            metric_power(&m.mul_vec(&y).unwrap()) != metric_power(&y)
        });
        prop_assert!(moved);
    }

    #[test]
    fn non_unit_scales_rejected(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = trial_rng(seed, 6);
        let p = sample::scaled_perm(&mut rng, n);
        let mut m = p.to_dense();
        let row = rng.random_range(0..n);
        let col = p.sigma().apply(row);
        let bumped = m.get(row, col) * Rational::from_integer(2.into());
        m.set(row, col, bumped);
        match Classifier::default().check(&m).unwrap() {
            InvarianceReport::Violation(w @ Witness::PermanentMismatch { .. }) => prop_assert!(verify_witness(&m, &w)),
            other => return Err(TestCaseError::fail(format!("{other:?}"))),
        }
    }

    #[test]
    fn membership_agrees_with_pattern(seed in any::<u64>(), n in 2usize..=5, perturb in any::<bool>()) {
        let mut rng = trial_rng(seed, 7);
        let p = sample::scaled_perm(&mut rng, n);
        let x = if perturb { sample::perturbed(&mut rng, &p) } else { p.to_dense() };
        let sigma = if rng.random_bool(0.5) { p.sigma().inverse() } else { sample::permutation(&mut rng, n) };
        let by_pattern = match extract_pattern(&x) {
            Ok((s, a)) => s == sigma.inverse() && rational::product(&a).is_one(),
            Err(_) => false,
        };
        prop_assert_eq!(membership_test(&x, &sigma).unwrap(), by_pattern);
    }

    #[test]
    fn lie_exp_log(seed in any::<u64>(), n in 2usize..=10) {
        let mut rng = trial_rng(seed, 8);
        let coefficients: Vec<f64> = (0..n - 1).map(|_| rng.random_range(-3.0..3.0)).collect();
        let x = TracelessDiagonal::from_coefficients(&coefficients).unwrap();
        let a = lie::exp(&x);
        let det: f64 = a.diag().iter().product();
        prop_assert!((det - 1.0).abs() <= 1e-12);
        prop_assert!(DiagonalGroupElement::new(a.diag().to_vec()).is_ok());
        let back = lie::log(&a).unwrap();
        for (u, v) in back.diag().iter().zip(x.diag()) {
            prop_assert!((u - v).abs() <= 1e-12);
        }
        let again = lie::exp(&back);
        for (u, v) in again.diag().iter().zip(a.diag()) {
            prop_assert!((u - v).abs() <= 1e-12 * v.abs());
        }
        prop_assert_eq!(TracelessDiagonal::from_coefficients(x.coefficients()).unwrap(), x);
    }

    #[test]
    fn diagonal_group_is_abelian_and_embeds(seed in any::<u64>(), n in 2usize..=7) {
        let mut rng = trial_rng(seed, 9);
        let first = |rng: &mut _| -> Vec<Rational> { (0..n - 1).map(|_| sample::nonzero_rational(rng)).collect() };
        let a = lie::dn1_new(&first(&mut rng)).unwrap();
        let b = lie::dn1_new(&first(&mut rng)).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(lie::dn1_new(lie::chart(&a).coords()).unwrap(), a.clone());
        prop_assert_eq!(lie::mu(&a, &b).unwrap(), a.inverse().mul(&b).unwrap());
        prop_assert_eq!(
            lie::mu(&a, &b).unwrap().to_scaled_perm(),
            a.to_scaled_perm().inverse().compose(&b.to_scaled_perm()).unwrap()
        );
        let negatives = lie::component_signature(&a).iter().filter(|&&s| s < 0).count();
        prop_assert_eq!(negatives % 2, 0);
        prop_assert_eq!(DiagonalGroupElement::from_scaled_perm(&a.to_scaled_perm()), Some(a));
    }
}

#[test]
fn basis_is_independent_with_zero_brackets() {
    for n in 2..=10 {
        let basis = lie::basis_all::<Rational>(n).unwrap();
        assert_eq!(basis.len(), n - 1);
        // coefficient vectors are the rows of I_{n-1}
        for (i, e) in basis.iter().enumerate() {
            for (k, c) in e.coefficients().iter().enumerate() {
                assert_eq!(c.is_one(), i == k);
            }
        }
        for x in &basis {
            for y in &basis {
                assert!(lie::bracket(x, y).unwrap().is_zero());
            }
        }
        assert!(lie::structure_constants::<Rational>(n).unwrap().is_zero());
        assert!(lie::structure_constants::<f64>(n).unwrap().is_zero());
    }
}
