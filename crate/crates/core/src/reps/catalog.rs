//! Named operator, frame and wavefunction constructors.

use std::collections::BTreeMap;

use rand::Rng;

use super::{compose_ok, cross_component, epsilon, p_vec, pi_vec, RepKind, Representation};
use crate::algebra::{LinOp, MatFn, VecFn, WaveFn};
use crate::expr::Expr;
use crate::Error;

/// Spin-1 matrices `(S_k)_{ab} = -i ε_{kab}`.
pub fn spin_matrices() -> [MatFn; 3] {
    std::array::from_fn(|k| {
        MatFn::from_fn(|a, b| match epsilon(k, a, b) {
            0 => Expr::zero(),
            e => Expr::int(-e).mul(&Expr::i()),
        })
    })
}

/// `P^0 = r`, `P^i = p^i` as multiplication operators.
pub fn momentum() -> [LinOp; 4] {
    [
        LinOp::scalar(&Expr::r()),
        LinOp::scalar(&Expr::p(0)),
        LinOp::scalar(&Expr::p(1)),
        LinOp::scalar(&Expr::p(2)),
    ]
}

/// `Q^i = i ∂/∂p^i`.
pub fn flat_q() -> [LinOp; 3] {
    std::array::from_fn(|i| {
        let mut b: VecFn = std::array::from_fn(|_| Expr::zero());
        b[i] = Expr::i();
        LinOp::derivative(b)
    })
}

/// `L = -i p × ∂`.
pub fn orbital_l() -> [LinOp; 3] {
    let mi = Expr::i().neg();
    std::array::from_fn(|i| {
        let b: VecFn = std::array::from_fn(|k| {
            (0..3).fold(Expr::zero(), |acc, j| match epsilon(i, j, k) {
                0 => acc,
                e => acc.add(&Expr::int(e).mul(&mi).mul(&Expr::p(j))),
            })
        });
        LinOp::derivative(b)
    })
}

/// `K = i (p_0 ∂ + π/2)`.
pub fn boost_k() -> [LinOp; 3] {
    let i = Expr::i();
    let r = Expr::r();
    std::array::from_fn(|k| {
        let mut b: VecFn = std::array::from_fn(|_| Expr::zero());
        b[k] = i.mul(&r);
        let a = i.mul(&Expr::rational(1, 2)).mul(&Expr::p(k).div(&r));
        LinOp::new(MatFn::scalar(&a), b)
    })
}

pub fn spin_ops() -> [LinOp; 3] {
    spin_matrices().map(LinOp::multiplicative)
}

/// `n = π × S`.
pub fn n_ops() -> [LinOp; 3] {
    let pi = pi_vec();
    let s = spin_matrices();
    std::array::from_fn(|i| {
        let m = (0..3).fold(MatFn::zero(), |acc, j| {
            (0..3).fold(acc, |acc, k| match epsilon(i, j, k) {
                0 => acc,
                e => acc.add(&s[k].scale(&Expr::int(e).mul(&pi[j]))),
            })
        });
        LinOp::multiplicative(m)
    })
}

/// `M = L + S`.
pub fn rotations_m() -> [LinOp; 3] {
    let (l, s) = (orbital_l(), spin_ops());
    std::array::from_fn(|i| &l[i] + &s[i])
}

/// `N = K + n`.
pub fn boosts_n() -> [LinOp; 3] {
    let (k, n) = (boost_k(), n_ops());
    std::array::from_fn(|i| &k[i] + &n[i])
}

/// `π · S`.
pub fn helicity_matrix() -> MatFn {
    let pi = pi_vec();
    let s = spin_matrices();
    (0..3).fold(MatFn::zero(), |acc, k| acc.add(&s[k].scale(&pi[k])))
}

/// `Λ = π · M = π · S` of the original representation.
pub fn helicity_original() -> LinOp {
    LinOp::multiplicative(helicity_matrix())
}

/// `Σ_{jk} ε_{ijk} p^j S_k`, the i-th component of `p × S`.
fn p_cross_s(i: usize) -> MatFn {
    let s = spin_matrices();
    (0..3).fold(MatFn::zero(), |acc, j| {
        (0..3).fold(acc, |acc, k| match epsilon(i, j, k) {
            0 => acc,
            e => acc.add(&s[k].scale(&Expr::int(e).mul(&Expr::p(j)))),
        })
    })
}

/// Pryce operator `X_P^i = i ∂/∂p^i + ε_{ijk} p^j S_k / p_0²`.
pub fn pryce_x() -> [LinOp; 3] {
    let r2 = Expr::r().powi(2);
    let q = flat_q();
    std::array::from_fn(|i| {
        let m = p_cross_s(i).map(|e| e.div(&r2));
        &q[i] + &LinOp::multiplicative(m)
    })
}

/// Spherical frame `(θ̂, φ̂, p̂)` in rational-radical form.
pub fn frame() -> [VecFn; 3] {
    let (r, rho) = (Expr::r(), Expr::rho());
    let (p1, p2, p3) = (Expr::p(0), Expr::p(1), Expr::p(2));
    let r_rho = r.mul(&rho);
    [
        [
            p3.mul(&p1).div(&r_rho),
            p3.mul(&p2).div(&r_rho),
            rho.div(&r).neg(),
        ],
        [p2.div(&rho).neg(), p1.div(&rho), Expr::zero()],
        [p1.div(&r), p2.div(&r), p3.div(&r)],
    ]
}

/// `U(p)` with the frame vectors as columns: `U e_i = ẽ_i`.
pub fn u_matrix() -> MatFn {
    MatFn::from_columns(&frame())
}

/// `Q̂ = U Q U†` from the closed form
/// `i ∂/∂p + (1/p_0²) p × S - (cot θ / p_0) ẽ_2 S̃_3`,
/// where `S̃_3 = U S_3 U† = π · S` is the spin component along the third
/// frame vector.
pub fn hawton_q() -> [LinOp; 3] {
    let (r, rho) = (Expr::r(), Expr::rho());
    let r2 = r.powi(2);
    let cot_over_p0 = Expr::p(2).div(&rho.mul(&r));
    let e2 = &frame()[1];
    let s3_frame = helicity_matrix();
    let q = flat_q();
    std::array::from_fn(|i| {
        let m = p_cross_s(i)
            .map(|e| e.div(&r2))
            .sub(&s3_frame.scale(&cot_over_p0.mul(&e2[i])));
        &q[i] + &LinOp::multiplicative(m)
    })
}

/// `Q̂ = U Q U†` by conjugation.
pub fn hawton_q_conjugated() -> [LinOp; 3] {
    let u = u_matrix();
    flat_q().map(|q| q.unitary_conjugate(&u))
}

/// `K = ½ (Q P^0 + P^0 Q)`, assembled from products.
pub fn boost_from_q(q: &[LinOp; 3]) -> [LinOp; 3] {
    let p0 = &momentum()[0];
    let half = Expr::rational(1, 2);
    std::array::from_fn(|i| (&compose_ok(&q[i], p0) + &compose_ok(p0, &q[i])).scale(&half))
}

/// `L = Q × P`.
pub fn orbital_from_q(q: &[LinOp; 3]) -> [LinOp; 3] {
    let p = momentum();
    let spatial = [p[1].clone(), p[2].clone(), p[3].clone()];
    std::array::from_fn(|i| cross_component(i, q, &spatial, compose_ok))
}

/// Gaussian damping `exp(-r²)`.
pub fn gaussian() -> Expr {
    Expr::r().powi(2).neg().exp()
}

/// Named test wavefunctions: three transverse, two longitudinal, one mixed.
pub fn catalog_wavefns() -> Vec<(&'static str, WaveFn)> {
    let g = gaussian();
    let [e1, e2, _] = frame();
    let p = p_vec();
    let i = Expr::i();
    let c: VecFn = [Expr::one(), i.clone(), Expr::int(2)];
    let p_cross_c: VecFn = [
        p[1].mul(&c[2]).sub(&p[2].mul(&c[1])),
        p[2].mul(&c[0]).sub(&p[0].mul(&c[2])),
        p[0].mul(&c[1]).sub(&p[1].mul(&c[0])),
    ];
    let modulated = g.mul(&Expr::one().add(&i.mul(&Expr::p(2)))).div(&Expr::r());
    vec![
        (
            "gauss",
            WaveFn::new([g.clone(), Expr::zero(), Expr::zero()]),
        ),
        ("e1-transverse", WaveFn::scaled(&g, &e1)),
        ("e2-transverse", WaveFn::scaled(&g, &e2)),
        ("cross-transverse", WaveFn::scaled(&g, &p_cross_c)),
        ("radial-longitudinal", WaveFn::scaled(&g, &p)),
        ("modulated-longitudinal", WaveFn::scaled(&modulated, &p)),
    ]
}

pub fn wavefn_by_name(name: &str) -> Result<WaveFn, Error> {
    let all = catalog_wavefns();
    let known = all.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", ");
    all.into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| f)
        .ok_or(Error::UnknownName {
            name: name.to_string(),
            known,
        })
}

fn small_complex(rng: &mut impl Rng) -> Expr {
    let re = rng.gen_range(-3i64..=3);
    let im = rng.gen_range(-3i64..=3);
    Expr::int(re).add(&Expr::int(im).mul(&Expr::i()))
}

/// Gaussian-damped wavefunction with random low-degree polynomial and
/// radical factors and small Gaussian-integer coefficients.
pub fn random_wavefn(rng: &mut impl Rng) -> WaveFn {
    let g = gaussian();
    let r = Expr::r();
    let monomials = [
        Expr::one(),
        Expr::p(0),
        Expr::p(1),
        Expr::p(2),
        r.clone(),
        Expr::p(0).mul(&Expr::p(2)),
        Expr::p(1).mul(&Expr::p(1)),
        Expr::p(2).div(&r),
    ];
    WaveFn::new(std::array::from_fn(|_| {
        let poly = monomials.iter().fold(Expr::zero(), |acc, m| {
            if rng.gen_bool(0.5) {
                acc.add(&small_complex(rng).mul(m))
            } else {
                acc
            }
        });
        let poly = if poly.is_zero() { Expr::one() } else { poly };
        g.mul(&poly)
    }))
}

/// One entry of the operator catalog.
#[derive(Clone, Debug)]
pub enum CatalogItem {
    Op(LinOp),
    /// A vector of operators, shown component by component.
    Family(Vec<(String, LinOp)>),
    Matrix(MatFn),
    Vector(VecFn),
}

fn family(prefix: &str, ops: &[LinOp]) -> Vec<(String, LinOp)> {
    ops.iter()
        .enumerate()
        .map(|(i, o)| (format!("{prefix}-{}", i + 1), o.clone()))
        .collect()
}

/// All named catalog entries, in a fixed order.
pub fn operator_catalog() -> BTreeMap<String, CatalogItem> {
    let mut cat = BTreeMap::new();
    let mut put_family = |name: &str, short: &str, ops: &[LinOp]| {
        for (i, o) in ops.iter().enumerate() {
            cat.insert(format!("{short}{}", i + 1), CatalogItem::Op(o.clone()));
        }
        cat.insert(name.to_string(), CatalogItem::Family(family(name, ops)));
    };
    put_family("momentum", "P", &momentum()[1..]);
    put_family("flat-q", "Q", &flat_q());
    put_family("orbital", "L", &orbital_l());
    put_family("boost-k", "K", &boost_k());
    put_family("spin", "S", &spin_ops());
    put_family("n", "n", &n_ops());
    put_family("rotation", "M", &rotations_m());
    put_family("boost", "N", &boosts_n());
    let pryce = pryce_x();
    let hawton = hawton_q();
    let conj = hawton_q_conjugated();
    let tilde = Representation::build(RepKind::Tilde);
    let hat = Representation::build(RepKind::Hat);
    put_family("pryce", "pryce-", &pryce);
    put_family("hawton-closed-form", "hawton-", &hawton);
    put_family("hawton-conjugated", "hawton-conjugated-", &conj);
    put_family("hat-rotation", "hat-L", &hat.rotations);
    put_family("hat-boost", "hat-K", &hat.boosts);
    put_family("tilde-rotation", "tilde-M", &tilde.rotations);
    put_family("tilde-boost", "tilde-N", &tilde.boosts);

    cat.insert("P0".into(), CatalogItem::Op(momentum()[0].clone()));
    for (i, s) in spin_matrices().into_iter().enumerate() {
        cat.insert(format!("S{}", i + 1), CatalogItem::Matrix(s));
    }
    cat.insert("helicity".into(), CatalogItem::Op(helicity_original()));
    cat.insert(
        "helicity-squared".into(),
        CatalogItem::Op(compose_ok(&helicity_original(), &helicity_original())),
    );
    cat.insert(
        "tilde-helicity".into(),
        CatalogItem::Op(tilde.helicity.clone()),
    );
    cat.insert("U".into(), CatalogItem::Matrix(u_matrix()));
    for (i, v) in frame().into_iter().enumerate() {
        cat.insert(format!("e{}", i + 1), CatalogItem::Vector(v));
    }
    cat
}

fn known_names(cat: &BTreeMap<String, CatalogItem>) -> String {
    cat.keys().cloned().collect::<Vec<_>>().join(", ")
}

pub fn catalog_item(name: &str) -> Result<CatalogItem, Error> {
    let mut cat = operator_catalog();
    cat.remove(name).ok_or_else(|| Error::UnknownName {
        name: name.to_string(),
        known: known_names(&operator_catalog()),
    })
}

/// A single operator by name; matrices are promoted to multiplication
/// operators.
pub fn operator_by_name(name: &str) -> Result<LinOp, Error> {
    match catalog_item(name)? {
        CatalogItem::Op(o) => Ok(o),
        CatalogItem::Matrix(m) => Ok(LinOp::multiplicative(m)),
        CatalogItem::Family(_) | CatalogItem::Vector(_) => {
            let cat = operator_catalog();
            let ops: Vec<String> = cat
                .iter()
                .filter(|(_, v)| matches!(v, CatalogItem::Op(_) | CatalogItem::Matrix(_)))
                .map(|(k, _)| k.clone())
                .collect();
            Err(Error::UnknownName {
                name: name.to_string(),
                known: ops.join(", "),
            })
        }
    }
}

/// Stable text rendering of a catalog entry.
pub fn render(name: &str, item: &CatalogItem) -> String {
    match item {
        CatalogItem::Op(o) => format!("{name}:\n{}", o.show()),
        CatalogItem::Family(ops) => ops
            .iter()
            .map(|(n, o)| format!("{n}:\n{}", o.show()))
            .collect::<Vec<_>>()
            .join(""),
        CatalogItem::Matrix(m) => {
            let mut s = format!("{name}:\n");
            for row in &m.0 {
                let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                s.push_str(&format!("  [{}]\n", cells.join(", ")));
            }
            s
        }
        CatalogItem::Vector(v) => {
            let cells: Vec<String> = v.iter().map(|e| e.to_string()).collect();
            format!("{name}:\n  ({})\n", cells.join(", "))
        }
    }
}
