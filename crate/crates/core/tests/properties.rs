mod common;

use num_complex::Complex;
use photonloc::reps::u_matrix;
use photonloc::{Expr, LinOp, SamplePlan};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

fn points(seed: u64, count: usize) -> Vec<[f64; 3]> {
    SamplePlan {
        seed,
        count,
        ..SamplePlan::default()
    }
    .points()
    .unwrap()
}

fn assert_zero(op: &LinOp, seed: u64) {
    let test = op.is_zero_at(&points(seed, 32), TOL).unwrap();
    assert!(test.passed(), "{:?}", test.witness());
}

fn close(a: Complex<f64>, b: Complex<f64>, rel: f64) -> bool {
    (a - b).norm() <= rel * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 20,
        rng_seed: RngSeed::Fixed(0),
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn commutator_is_antisymmetric(seed in any::<u64>()) {
        let ops = common::catalog_ops();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_op(&mut rng, &ops);
        let b = common::random_op(&mut rng, &ops);
        assert_zero(&(&a.commutator(&b) + &b.commutator(&a)), seed);
    }

    #[test]
    fn jacobi_identity(seed in any::<u64>()) {
        let ops = common::catalog_ops();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_op(&mut rng, &ops);
        let b = common::random_op(&mut rng, &ops);
        let c = common::random_op(&mut rng, &ops);
        let sum = &(&a.commutator(&b.commutator(&c)) + &b.commutator(&c.commutator(&a)))
            + &c.commutator(&a.commutator(&b));
        assert_zero(&sum, seed);
    }

    #[test]
    fn formal_adjoint_is_an_involution(seed in any::<u64>()) {
        let ops = common::catalog_ops();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_op(&mut rng, &ops);
        assert_zero(&(&a.formal_adjoint().formal_adjoint() - &a), seed);
    }

    #[test]
    fn conjugation_preserves_commutators(seed in any::<u64>()) {
        let ops = common::catalog_ops();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_op(&mut rng, &ops);
        let b = common::random_op(&mut rng, &ops);
        let u = u_matrix();
        let lhs = a.commutator(&b).unitary_conjugate(&u);
        let rhs = a.unitary_conjugate(&u).commutator(&b.unitary_conjugate(&u));
        assert_zero(&(&lhs - &rhs), seed);
    }

    #[test]
    fn derivative_matches_central_difference(seed in any::<u64>(), axis in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = common::random_expr(&mut rng, 3);
        let d = e.diff(axis);
        for p in points(seed, 100) {
            let r = p.iter().map(|x| x * x).sum::<f64>().sqrt();
            let h = 1e-5 * r;
            let (mut lo, mut hi) = (p, p);
            lo[axis] -= h;
            hi[axis] += h;
            let (Ok(a), Ok(b), Ok(exact)) = (e.eval(lo), e.eval(hi), d.eval(p)) else {
                continue;
            };
            let fd = (b - a) / (2.0 * h);
            // relative to the size of the difference quotient's inputs
            let scale = (a.norm() + b.norm()) / (2.0 * h) * 1e-10 + exact.norm();
            prop_assert!(
                (fd - exact).norm() <= 1e-6 * (1.0 + scale),
                "{e} d/dp{}: fd {fd} exact {exact} at {p:?}", axis + 1
            );
        }
    }

    #[test]
    fn substitute_neg_is_an_involution(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = common::random_expr(&mut rng, 4);
        let twice = e.substitute_neg().substitute_neg();
        for p in points(seed, 16) {
            let neg = p.map(|x| -x);
            if let (Ok(a), Ok(b), Ok(c)) = (e.eval(p), twice.eval(p), e.substitute_neg().eval(neg)) {
                prop_assert!(close(a, b, 1e-12));
                prop_assert!(close(a, c, 1e-12));
            }
        }
    }

    #[test]
    fn conjugate_commutes_with_substitute_neg(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = common::random_expr(&mut rng, 4);
        let one = e.conjugate().substitute_neg();
        let other = e.substitute_neg().conjugate();
        for p in points(seed, 16) {
            if let (Ok(a), Ok(b), Ok(c)) = (one.eval(p), other.eval(p), e.eval(p.map(|x| -x))) {
                prop_assert!(close(a, b, 1e-12));
                prop_assert!(close(a, c.conj(), 1e-12));
            }
        }
    }
}

#[test]
fn identity_conjugation_is_trivial() {
    let ops = common::catalog_ops();
    let id = photonloc::MatFn::identity();
    for (name, o) in &ops {
        let d = &o.unitary_conjugate(&id) - o;
        assert!(d.entries().iter().all(|(_, e)| e.is_zero()), "{name}");
    }
}

#[test]
fn folding_keeps_exact_constants() {
    let third = Expr::rational(1, 3);
    let sum = third.add(&third).add(&third);
    assert!(sum.is_one());
    assert!(Expr::i().mul(&Expr::i()).add(&Expr::one()).is_zero());
}
