use super::*;
use crate::sampling::SamplePlan;
use num_complex::Complex;

fn pts() -> Vec<[f64; 3]> {
    SamplePlan::default().points().unwrap()
}

fn zero(op: &LinOp) -> bool {
    op.is_zero_at(&pts(), 1e-9).unwrap().passed()
}

fn c(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

#[test]
fn spin_matrix_action_and_algebra() {
    let s = spin_matrices();
    let v = s[2].mul_vec(&[Expr::one(), Expr::zero(), Expr::zero()]);
    let pt = [0.1, 0.2, 0.3];
    assert_eq!(v[0].eval(pt).unwrap(), c(0.0, 0.0));
    assert_eq!(v[1].eval(pt).unwrap(), c(0.0, 1.0));
    assert_eq!(v[2].eval(pt).unwrap(), c(0.0, 0.0));

    let comm = s[0].commutator(&s[1]).sub(&s[2].scale(&Expr::i()));
    assert!(comm.0.iter().flatten().all(Expr::is_zero));
    for sk in &s {
        assert_eq!(sk.adjoint(), *sk);
    }
}

#[test]
fn frame_matrix_at_x_axis() {
    let u = u_matrix().eval([1.0, 0.0, 0.0]).unwrap();
    let expected = [[0.0, 0.0, 1.0], [0.0, 1.0, 0.0], [-1.0, 0.0, 0.0]];
    for i in 0..3 {
        for j in 0..3 {
            assert!((u[i][j] - c(expected[i][j], 0.0)).norm() < 1e-15);
        }
    }
}

#[test]
fn frame_matrix_is_orthogonal_and_maps_basis() {
    let u = u_matrix();
    u.check_unitary(&pts(), 1e-12).unwrap();
    let frame = frame();
    for (i, e) in frame.iter().enumerate() {
        let mut unit: VecFn = std::array::from_fn(|_| Expr::zero());
        unit[i] = Expr::one();
        let ue = u.mul_vec(&unit);
        let d: Vec<(String, Expr)> = (0..3).map(|k| (format!("{k}"), ue[k].sub(&e[k]))).collect();
        assert!(crate::algebra::exprs_vanish(&d, &pts(), 1e-12)
            .unwrap()
            .passed());
    }
}

#[test]
fn transported_momentum_is_unchanged() {
    let u = u_matrix();
    for p in momentum() {
        assert!(zero(&(&p.unitary_conjugate(&u) - &p)));
    }
}

#[test]
fn hawton_closed_form_matches_conjugation() {
    let closed = hawton_q();
    let conj = hawton_q_conjugated();
    for i in 0..3 {
        assert!(zero(&(&closed[i] - &conj[i])), "component {}", i + 1);
        // derivative part is that of Q
        for k in 0..3 {
            let want = if k == i { Expr::i() } else { Expr::zero() };
            assert_eq!(closed[i].b[k], want);
        }
    }
}

#[test]
fn hawton_closed_form_with_cartesian_s3_is_not_the_conjugate() {
    // the frame spin component S̃_3 = π·S is essential; a Cartesian S_3
    // would give a different operator
    let (r, rho) = (Expr::r(), Expr::rho());
    let cot_over_p0 = Expr::p(2).div(&rho.mul(&r));
    let e2 = &frame()[1];
    let s3 = &spin_matrices()[2];
    let conj = hawton_q_conjugated();
    let wrong = &hawton_q()[0]
        + &LinOp::multiplicative(helicity_matrix().sub(s3).scale(&cot_over_p0.mul(&e2[0])));
    assert!(!zero(&(&wrong - &conj[0])));
}

#[test]
fn hawton_multiplicative_part_oracle_at_point() {
    // independent evaluation of i U ∂_3 Uᵀ by central differences of U
    let p = [1.0, 0.0, 0.0f64];
    let h = 1e-5;
    let u = u_matrix();
    let shifted = |s: f64| u.eval([p[0], p[1], p[2] + s]).unwrap();
    let (plus, minus) = (shifted(h), shifted(-h));
    let u0 = u.eval(p).unwrap();
    let v = [0.0, 1.0, 0.0];
    let mut oracle = [c(0.0, 0.0); 3];
    for a in 0..3 {
        for b in 0..3 {
            // (U ∂Uᵀ)_{ab} = Σ_k U_{ak} ∂U_{bk}
            let m: Complex<f64> = (0..3)
                .map(|k| u0[a][k] * (plus[b][k] - minus[b][k]) / (2.0 * h))
                .sum();
            oracle[a] += c(0.0, 1.0) * m * v[b];
        }
    }
    let op = &hawton_q()[2];
    let got = op.a.mul_vec(&[Expr::zero(), Expr::one(), Expr::zero()]);
    for a in 0..3 {
        let g = got[a].eval(p).unwrap();
        assert!(
            (g - oracle[a]).norm() < 1e-8,
            "row {a}: {g} vs {}",
            oracle[a]
        );
    }
}

#[test]
fn pryce_basic_properties() {
    let x = pryce_x();
    let q = flat_q();
    for i in 0..3 {
        assert!((&x[i] - &q[i]).is_multiplicative());
    }
    let comm = momentum()[1].commutator(&x[0]);
    assert!(zero(&(&comm + &LinOp::scalar(&Expr::i()))));
    let pa = x[0].parity_conjugate(&MatFn::identity());
    assert!(zero(&(&pa + &x[0])));
    let ta = x[0].antiunitary_conjugate(&MatFn::identity());
    assert!(zero(&(&ta - &x[0])));
    assert!(zero(&(&x[0].formal_adjoint() - &x[0])));
}

#[test]
fn orbital_brackets() {
    let l = orbital_l();
    let c = l[0].commutator(&l[1]);
    assert!(zero(&(&c - &l[2].scale(&Expr::i()))));
}

#[test]
fn boost_is_symmetrized_position_times_energy() {
    let from_q = boost_from_q(&flat_q());
    let k = boost_k();
    for i in 0..3 {
        assert!(zero(&(&from_q[i] - &k[i])));
    }
}

#[test]
fn cross_product_ordering_is_immaterial() {
    // ε_{ijk} Q̂^j P^k versus ε_{ijk} P^k Q̂^j
    let q = hawton_q();
    let p = momentum();
    let spatial = [p[1].clone(), p[2].clone(), p[3].clone()];
    for i in 0..3 {
        let qp = cross_component(i, &q, &spatial, compose_ok);
        let pq = cross_component(i, &q, &spatial, |a, b| compose_ok(b, a));
        assert!(zero(&(&qp - &pq)));
    }
}

// With the spin matrices (S_k)_{ab} = -i ε_{kab}, S_k v = i e_k × v and hence
// Λ f = (π·S) f = i π × f.
#[test]
fn helicity_acts_as_cross_product() {
    let lam = helicity_original();
    let g = gaussian();
    let f = WaveFn::new([Expr::zero(), g.clone(), Expr::zero()]);
    let out = lam.apply(&f).eval([1.0, 0.0, 0.0]).unwrap();
    let e = (-1.0f64).exp();
    assert!(out[0].norm() < 1e-15 && out[1].norm() < 1e-15);
    assert!((out[2] - c(0.0, e)).norm() < 1e-15, "{out:?}");
}

#[test]
fn representation_helicities() {
    assert!(Representation::build(RepKind::Hat)
        .helicity
        .a
        .0
        .iter()
        .flatten()
        .all(Expr::is_zero));
    let tilde = Representation::build(RepKind::Tilde);
    assert!(tilde.helicity.is_multiplicative());
    let direct = helicity_original().unitary_conjugate(&u_matrix());
    assert!(zero(&(&tilde.helicity - &direct)));
}

#[test]
fn pauli_lubanski_original_is_helicity_times_momentum() {
    let rep = Representation::build(RepKind::Original);
    let w = rep.pauli_lubanski();
    for mu in 0..4 {
        let lp = compose_ok(&rep.helicity, &rep.momentum[mu]);
        assert!(zero(&(&w[mu] - &lp)), "mu = {mu}");
    }
    let aux = Representation::build(RepKind::Auxiliary);
    for w in aux.pauli_lubanski() {
        assert!(zero(&w));
    }
}

#[test]
fn subspace_classification() {
    let points = pts();
    let expect = [
        ("gauss", Subspace::Mixed),
        ("e1-transverse", Subspace::Transverse),
        ("e2-transverse", Subspace::Transverse),
        ("cross-transverse", Subspace::Transverse),
        ("radial-longitudinal", Subspace::Longitudinal),
        ("modulated-longitudinal", Subspace::Longitudinal),
    ];
    for (name, want) in expect {
        let f = wavefn_by_name(name).unwrap();
        assert_eq!(
            subspace_membership(&f, &points, 1e-9).unwrap(),
            want,
            "{name}"
        );
    }
    assert_eq!(
        subspace_membership(&WaveFn::zero(), &points, 1e-9).unwrap(),
        Subspace::Zero
    );
}

#[test]
fn twists_are_involutions() {
    for kind in [RepKind::Hat, RepKind::Tilde] {
        let rep = Representation::build(kind);
        rep.parity_twist
            .check_involution(&pts(), 1e-10, false)
            .unwrap();
        rep.timerev_twist
            .check_involution(&pts(), 1e-10, true)
            .unwrap();
    }
}

#[test]
fn catalog_lookup() {
    assert!(matches!(catalog_item("S3"), Ok(CatalogItem::Matrix(_))));
    assert!(operator_by_name("hawton-1").is_ok());
    match catalog_item("nosuch") {
        Err(crate::Error::UnknownName { known, .. }) => assert!(known.contains("pryce-1")),
        other => panic!("unexpected {other:?}"),
    }
    assert!(wavefn_by_name("nosuch").is_err());
}
