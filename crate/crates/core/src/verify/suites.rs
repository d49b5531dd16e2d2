//! The claim catalogue: one `SuiteDef` per (topic, representation,
//! operator), each listing conditions with their expected outcomes.

use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{ConditionDef, Expected, Obligation, SuiteDef};
use crate::algebra::{LinOp, MatFn, WaveFn};
use crate::expr::Expr;
use crate::reps::{
    boost_from_q, boost_k, catalog_wavefns, epsilon, flat_q, gaussian, hawton_q,
    hawton_q_conjugated, momentum, orbital_from_q, orbital_l, p_vec, pryce_x, random_wavefn,
    u_matrix, RepKind, Representation, Subspace,
};

/// Values accepted by `--suite` (besides `all`).
pub const SUITE_NAMES: [&str; 10] = [
    "lie-algebra",
    "helicity",
    "pauli-lubanski",
    "frame",
    "position",
    "subspace",
    "rotation-witness",
    "hawton-forms",
    "transport",
    "adjoint",
];

/// Operators and representations shared by all suites.
#[derive(Clone, Debug)]
pub struct Context {
    pub original: Representation,
    pub auxiliary: Representation,
    pub hat: Representation,
    pub tilde: Representation,
    pub flat: [LinOp; 3],
    pub pryce: [LinOp; 3],
    pub hawton: [LinOp; 3],
    pub hawton_conjugated: [LinOp; 3],
    pub u: MatFn,
}

impl Default for Context {
    fn default() -> Self {
        Self::new()
    }
}

impl Context {
    pub fn new() -> Context {
        Context {
            original: Representation::build(RepKind::Original),
            auxiliary: Representation::build(RepKind::Auxiliary),
            hat: Representation::build(RepKind::Hat),
            tilde: Representation::build(RepKind::Tilde),
            flat: flat_q(),
            pryce: pryce_x(),
            hawton: hawton_q(),
            hawton_conjugated: hawton_q_conjugated(),
            u: u_matrix(),
        }
    }

    pub fn rep(&self, kind: RepKind) -> &Representation {
        match kind {
            RepKind::Original => &self.original,
            RepKind::Auxiliary => &self.auxiliary,
            RepKind::Hat => &self.hat,
            RepKind::Tilde => &self.tilde,
        }
    }

    /// Position-operator triple by name: `pryce`, `hawton` or `flat`.
    pub fn position_operator(&self, name: &str) -> Option<[LinOp; 3]> {
        match name {
            "pryce" => Some(self.pryce.clone()),
            "hawton" => Some(self.hawton.clone()),
            "flat" => Some(self.flat.clone()),
            _ => None,
        }
    }
}

fn labelled(prefix: &str, op: &LinOp) -> Vec<(String, Expr)> {
    op.entries()
        .into_iter()
        .map(|(l, e)| (format!("{prefix} {l}"), e))
        .collect()
}

fn wave_labelled(prefix: &str, f: &WaveFn) -> Vec<(String, Expr)> {
    f.entries("f")
        .into_iter()
        .map(|(l, e)| (format!("{prefix} {l}"), e))
        .collect()
}

fn eps_sum(i: usize, j: usize, ops: &[LinOp; 3], coeff: &Expr) -> LinOp {
    (0..3).fold(LinOp::zero(), |acc, k| match epsilon(i, j, k) {
        0 => acc,
        e => &acc + &ops[k].scale(&coeff.mul(&Expr::int(e))),
    })
}

fn delta(i: usize, j: usize) -> Expr {
    if i == j {
        Expr::one()
    } else {
        Expr::zero()
    }
}

fn compose(a: &LinOp, b: &LinOp) -> LinOp {
    a.compose(b)
        .expect("harness products always have a scalar multiplicative factor")
}

fn vanish_pairs(f: impl Fn(usize, usize) -> LinOp) -> Obligation {
    let mut entries = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            entries.extend(labelled(&format!("({},{})", i + 1, j + 1), &f(i, j)));
        }
    }
    Obligation::Vanish(entries)
}

fn lie_algebra(rep: &Representation) -> Vec<ConditionDef> {
    let i_unit = Expr::i();
    let mut out = Vec::new();
    let r = rep.clone();
    let iu = i_unit.clone();
    out.push(ConditionDef::new(
        "[J,P]=i eps P",
        Expected::Pass,
        move || {
            let p = [
                r.momentum[1].clone(),
                r.momentum[2].clone(),
                r.momentum[3].clone(),
            ];
            vanish_pairs(|i, j| &r.rotations[i].commutator(&p[j]) - &eps_sum(i, j, &p, &iu))
        },
    ));
    let r = rep.clone();
    out.push(ConditionDef::new("[J,P0]=0", Expected::Pass, move || {
        let mut entries = Vec::new();
        for i in 0..3 {
            entries.extend(labelled(
                &format!("({})", i + 1),
                &r.rotations[i].commutator(&r.momentum[0]),
            ));
        }
        Obligation::Vanish(entries)
    }));
    let r = rep.clone();
    let iu = i_unit.clone();
    out.push(ConditionDef::new(
        "[B,P]=i delta P0",
        Expected::Pass,
        move || {
            vanish_pairs(|i, j| {
                &r.boosts[i].commutator(&r.momentum[j + 1])
                    - &r.momentum[0].scale(&iu.mul(&delta(i, j)))
            })
        },
    ));
    let r = rep.clone();
    let iu = i_unit.clone();
    out.push(ConditionDef::new("[B,P0]=i P", Expected::Pass, move || {
        let mut entries = Vec::new();
        for i in 0..3 {
            let d = &r.boosts[i].commutator(&r.momentum[0]) - &r.momentum[i + 1].scale(&iu);
            entries.extend(labelled(&format!("({})", i + 1), &d));
        }
        Obligation::Vanish(entries)
    }));
    let r = rep.clone();
    let miu = i_unit.neg();
    out.push(ConditionDef::new(
        "[B,B]=-i eps J",
        Expected::Pass,
        move || {
            vanish_pairs(|i, j| {
                &r.boosts[i].commutator(&r.boosts[j]) - &eps_sum(i, j, &r.rotations, &miu)
            })
        },
    ));
    let r = rep.clone();
    let iu = i_unit.clone();
    out.push(ConditionDef::new(
        "[J,B]=i eps B",
        Expected::Pass,
        move || {
            vanish_pairs(|i, j| {
                &r.rotations[i].commutator(&r.boosts[j]) - &eps_sum(i, j, &r.boosts, &iu)
            })
        },
    ));
    let r = rep.clone();
    let iu = i_unit;
    out.push(ConditionDef::new(
        "[J,J]=i eps J",
        Expected::Pass,
        move || {
            vanish_pairs(|i, j| {
                &r.rotations[i].commutator(&r.rotations[j]) - &eps_sum(i, j, &r.rotations, &iu)
            })
        },
    ));
    let r = rep.clone();
    out.push(ConditionDef::new("[P,P]=0", Expected::Pass, move || {
        let mut entries = Vec::new();
        for mu in 0..4 {
            for nu in (mu + 1)..4 {
                let c = r.momentum[mu].commutator(&r.momentum[nu]);
                entries.extend(labelled(&format!("({mu},{nu})"), &c));
            }
        }
        Obligation::Vanish(entries)
    }));
    out
}

fn helicity_suite(rep: &Representation, classify: bool) -> Vec<ConditionDef> {
    let mut out = Vec::new();
    let lam = rep.helicity.clone();
    out.push(ConditionDef::new("cube", Expected::Pass, move || {
        let cube = compose(&compose(&lam, &lam), &lam);
        Obligation::Vanish(labelled("L^3-L", &(&cube - &lam)))
    }));
    let lam2 = rep.helicity_squared();
    let l2 = lam2.clone();
    out.push(ConditionDef::new(
        "projector-idempotent",
        Expected::Pass,
        move || Obligation::Vanish(labelled("(L^2)^2-L^2", &(&compose(&l2, &l2) - &l2))),
    ));
    let l2 = lam2.clone();
    out.push(ConditionDef::new(
        "projector-hermitian",
        Expected::Pass,
        move || {
            let d = l2.a.sub(&l2.a.adjoint());
            Obligation::Vanish(d.entries("L^2-(L^2)^+"))
        },
    ));
    let r = rep.clone();
    out.push(ConditionDef::new(
        "commutes-with-generators",
        Expected::Pass,
        move || {
            let mut entries = Vec::new();
            for (name, g) in r.generators() {
                entries.extend(labelled(&format!("[L,{name}]"), &r.helicity.commutator(&g)));
            }
            Obligation::Vanish(entries)
        },
    ));
    if classify {
        for (name, f) in catalog_wavefns() {
            let want = if name.ends_with("transverse") {
                Subspace::Transverse
            } else if name.ends_with("longitudinal") {
                Subspace::Longitudinal
            } else {
                Subspace::Mixed
            };
            let g = f.clone();
            out.push(ConditionDef::new(
                format!("classify:{name}"),
                Expected::Pass,
                move || Obligation::Classify(g.clone(), want),
            ));
            let fixes = match want {
                Subspace::Transverse => Some(Expected::Pass),
                Subspace::Mixed => Some(Expected::Fail),
                _ => None,
            };
            let kills = match want {
                Subspace::Longitudinal => Some(Expected::Pass),
                Subspace::Mixed => Some(Expected::Fail),
                _ => None,
            };
            if let Some(exp) = fixes {
                let (l2, g) = (lam2.clone(), f.clone());
                out.push(ConditionDef::new(
                    format!("projector-fixes:{name}"),
                    exp,
                    move || Obligation::Vanish(wave_labelled("L^2 f - f", &l2.apply(&g).sub(&g))),
                ));
            }
            if let Some(exp) = kills {
                let (l2, g) = (lam2.clone(), f.clone());
                out.push(ConditionDef::new(
                    format!("projector-annihilates:{name}"),
                    exp,
                    move || Obligation::Vanish(wave_labelled("L^2 f", &l2.apply(&g))),
                ));
            }
        }
    }
    out
}

fn pauli_lubanski_suite(rep: &Representation) -> Vec<ConditionDef> {
    let mut out = Vec::new();
    let spinless = matches!(rep.kind, RepKind::Hat | RepKind::Auxiliary);
    let r = rep.clone();
    let id = if spinless { "W=0" } else { "W=Lambda P" };
    out.push(ConditionDef::new(id, Expected::Pass, move || {
        let w = r.pauli_lubanski();
        let mut entries = Vec::new();
        for mu in 0..4 {
            let target = if spinless {
                LinOp::zero()
            } else {
                compose(&r.helicity, &r.momentum[mu])
            };
            entries.extend(labelled(&format!("W{mu}"), &(&w[mu] - &target)));
        }
        Obligation::Vanish(entries)
    }));
    let r = rep.clone();
    out.push(ConditionDef::new("P.W=0", Expected::Pass, move || {
        let w = r.pauli_lubanski();
        let mut pw = compose(&r.momentum[0], &w[0]);
        for i in 1..4 {
            pw = &pw - &compose(&r.momentum[i], &w[i]);
        }
        Obligation::Vanish(labelled("P.W", &pw))
    }));
    let r = rep.clone();
    out.push(ConditionDef::new("P^2=0", Expected::Pass, move || {
        let mut p2 = compose(&r.momentum[0], &r.momentum[0]);
        for i in 1..4 {
            p2 = &p2 - &compose(&r.momentum[i], &r.momentum[i]);
        }
        Obligation::Vanish(labelled("P^2", &p2))
    }));
    out
}

fn frame_suite(rep: &Representation, u: &MatFn) -> Vec<ConditionDef> {
    let mut out = Vec::new();
    let uu = u.clone();
    out.push(ConditionDef::new("U-unitary", Expected::Pass, move || {
        Obligation::Vanish(
            uu.mul(&uu.adjoint())
                .sub(&MatFn::identity())
                .entries("UU^+-1"),
        )
    }));
    let v = rep.parity_twist.clone();
    out.push(
        ConditionDef::new("parity-twist-involution", Expected::Pass, move || {
            let d = v.mul(&v.substitute_neg()).sub(&MatFn::identity());
            Obligation::Vanish(d.entries("V(p)V(-p)-1"))
        })
        .with_note(
            "twist V(p) = U(p) U^T(-p) transports the parity of the original representation",
        ),
    );
    let v = rep.timerev_twist.clone();
    out.push(ConditionDef::new(
        "time-reversal-twist-involution",
        Expected::Pass,
        move || {
            let d = v
                .mul(&v.substitute_neg().conjugate())
                .sub(&MatFn::identity());
            Obligation::Vanish(d.entries("V(p)V*(-p)-1"))
        },
    ));
    let uu = u.clone();
    out.push(ConditionDef::new(
        "momentum-invariant",
        Expected::Pass,
        move || {
            let mut entries = Vec::new();
            for (mu, p) in momentum().iter().enumerate() {
                entries.extend(labelled(
                    &format!("UP{mu}U^+-P{mu}"),
                    &(&p.unitary_conjugate(&uu) - p),
                ));
            }
            Obligation::Vanish(entries)
        },
    ));
    out
}

/// Expected outcomes, in the order rotation, translation, parity, time
/// reversal, helicity projector, commuting components.
type PositionExpectations = [Expected; 6];

fn position_expectations(
    operator: &str,
    rep: RepKind,
) -> Option<(PositionExpectations, Option<&'static str>)> {
    use Expected::{Fail as F, Informational as I, Pass as P};
    Some(match (operator, rep) {
        ("pryce", RepKind::Original) => ([P, P, P, P, P, F], None),
        ("hawton", RepKind::Original) => ([F, I, I, I, P, P], None),
        ("hawton", RepKind::Hat) => (
            [P, P, P, P, P, P],
            Some("parity and time reversal use the transported twist V(p) = U(p) U^T(-p); helicity is identically zero"),
        ),
        ("hawton", RepKind::Tilde) => ([P, P, I, I, F, P], None),
        ("flat", RepKind::Original) => ([I, I, I, I, F, P], None),
        _ => return None,
    })
}

fn position_suite(
    x: &[LinOp; 3],
    rep: &Representation,
    expected: PositionExpectations,
) -> Vec<ConditionDef> {
    let mut out = Vec::new();
    let iu = Expr::i();
    let (xx, r) = (x.clone(), rep.clone());
    out.push(ConditionDef::new(
        "rotation-covariance",
        expected[0],
        move || vanish_pairs(|i, j| &r.rotations[i].commutator(&xx[j]) - &eps_sum(i, j, &xx, &iu)),
    ));
    let (xx, r) = (x.clone(), rep.clone());
    out.push(ConditionDef::new(
        "translation-covariance",
        expected[1],
        move || {
            vanish_pairs(|i, j| {
                &r.momentum[i + 1].commutator(&xx[j]) + &LinOp::scalar(&Expr::i().mul(&delta(i, j)))
            })
        },
    ));
    let (xx, r) = (x.clone(), rep.clone());
    out.push(ConditionDef::new("parity-odd", expected[2], move || {
        let mut entries = Vec::new();
        for i in 0..3 {
            let d = &xx[i].parity_conjugate(&r.parity_twist) + &xx[i];
            entries.extend(labelled(&format!("({})", i + 1), &d));
        }
        Obligation::Vanish(entries)
    }));
    let (xx, r) = (x.clone(), rep.clone());
    out.push(ConditionDef::new(
        "time-reversal-even",
        expected[3],
        move || {
            let mut entries = Vec::new();
            for i in 0..3 {
                let d = &xx[i].antiunitary_conjugate(&r.timerev_twist) - &xx[i];
                entries.extend(labelled(&format!("({})", i + 1), &d));
            }
            Obligation::Vanish(entries)
        },
    ));
    let (xx, r) = (x.clone(), rep.clone());
    out.push(ConditionDef::new(
        "helicity-projector-commutes",
        expected[4],
        move || {
            let l2 = r.helicity_squared();
            let mut entries = Vec::new();
            for i in 0..3 {
                entries.extend(labelled(&format!("({})", i + 1), &xx[i].commutator(&l2)));
            }
            Obligation::VanishOrVacuous(entries)
        },
    ));
    let xx = x.clone();
    out.push(ConditionDef::new(
        "components-commute",
        expected[5],
        move || {
            let mut entries = Vec::new();
            for i in 0..3 {
                for j in (i + 1)..3 {
                    entries.extend(labelled(
                        &format!("({},{})", i + 1, j + 1),
                        &xx[i].commutator(&xx[j]),
                    ));
                }
            }
            Obligation::Vanish(entries)
        },
    ));
    out
}

fn subspace_suite(x: &[LinOp; 3], expected: Expected) -> Vec<ConditionDef> {
    let xx = x.clone();
    vec![ConditionDef::new(
        "longitudinal-preserved",
        expected,
        move || {
            let p = p_vec();
            let mut entries = Vec::new();
            for (name, f) in catalog_wavefns() {
                if !name.ends_with("longitudinal") {
                    continue;
                }
                for (i, xi) in xx.iter().enumerate() {
                    let g = xi.apply(&f).cross_from_left(&p);
                    entries.extend(wave_labelled(&format!("p x X{} {name}", i + 1), &g));
                }
            }
            Obligation::Vanish(entries)
        },
    )]
}

/// `f = (a(p_0), 0, 0)` with `a(p_0) = exp(-p_0²)`.
fn radial_witness_fn() -> WaveFn {
    WaveFn::new([gaussian(), Expr::zero(), Expr::zero()])
}

fn applied_commutator(a: &LinOp, b: &LinOp, f: &WaveFn) -> WaveFn {
    a.apply(&b.apply(f)).sub(&b.apply(&a.apply(f)))
}

fn rotation_witness_suite(ctx: &Context) -> Vec<ConditionDef> {
    let mut out = Vec::new();
    let m1 = ctx.original.rotations[0].clone();
    let q1 = ctx.hawton[0].clone();
    let x1 = ctx.pryce[0].clone();
    let p1 = ctx.original.momentum[1].clone();

    let (m, q) = (m1.clone(), q1.clone());
    out.push(ConditionDef::new(
        "[M1,Qhat1]f=0 on f=(a(p0),0,0)",
        Expected::Fail,
        move || {
            let g = applied_commutator(&m, &q, &radial_witness_fn());
            Obligation::Vanish(wave_labelled("M1Q1f-Q1M1f", &g))
        },
    ));
    let (m, q) = (m1.clone(), q1.clone());
    out.push(ConditionDef::new(
        "[M1,Qhat1] operator=0",
        Expected::Fail,
        move || Obligation::Vanish(labelled("[M1,Q1]", &m.commutator(&q))),
    ));
    let (m, q) = (m1.clone(), q1.clone());
    out.push(ConditionDef::new(
        "closed-form commutator agrees with applied",
        Expected::Pass,
        move || {
            let f = radial_witness_fn();
            let d = m
                .commutator(&q)
                .apply(&f)
                .sub(&applied_commutator(&m, &q, &f));
            Obligation::Vanish(wave_labelled("closed-applied", &d))
        },
    ));
    let m = m1;
    out.push(ConditionDef::new(
        "[M1,X1]f=0 on f=(a(p0),0,0)",
        Expected::Pass,
        move || {
            let g = applied_commutator(&m, &x1, &radial_witness_fn());
            Obligation::Vanish(wave_labelled("M1X1f-X1M1f", &g))
        },
    ));
    out.push(ConditionDef::new(
        "[P1,Qhat1]f=-i f",
        Expected::Pass,
        move || {
            let f = radial_witness_fn();
            let g = applied_commutator(&p1, &q1, &f).add(&f.scale(&Expr::i()));
            Obligation::Vanish(wave_labelled("[P1,Q1]f+if", &g))
        },
    ));
    out
}

fn hawton_forms_hat(ctx: &Context) -> Vec<ConditionDef> {
    let mut out = Vec::new();
    let (closed, conj) = (ctx.hawton.clone(), ctx.hawton_conjugated.clone());
    out.push(ConditionDef::new(
        "closed-form=UQU^+",
        Expected::Pass,
        move || {
            let mut entries = Vec::new();
            for i in 0..3 {
                entries.extend(labelled(&format!("({})", i + 1), &(&closed[i] - &conj[i])));
            }
            Obligation::Vanish(entries)
        },
    ));
    let (q, l_hat) = (ctx.hawton.clone(), ctx.hat.rotations.clone());
    out.push(ConditionDef::new(
        "Lhat=Qhat x P",
        Expected::Pass,
        move || {
            let from_q = orbital_from_q(&q);
            let mut entries = Vec::new();
            for i in 0..3 {
                entries.extend(labelled(&format!("({})", i + 1), &(&l_hat[i] - &from_q[i])));
            }
            Obligation::Vanish(entries)
        },
    ));
    let (q, k_hat) = (ctx.hawton.clone(), ctx.hat.boosts.clone());
    out.push(ConditionDef::new(
        "Khat=(Qhat P0 + P0 Qhat)/2",
        Expected::Pass,
        move || {
            let from_q = boost_from_q(&q);
            let mut entries = Vec::new();
            for i in 0..3 {
                entries.extend(labelled(&format!("({})", i + 1), &(&k_hat[i] - &from_q[i])));
            }
            Obligation::Vanish(entries)
        },
    ));
    out
}

fn hawton_forms_original() -> Vec<ConditionDef> {
    vec![
        ConditionDef::new("K=(Q P0 + P0 Q)/2", Expected::Pass, || {
            let (k, from_q) = (boost_k(), boost_from_q(&flat_q()));
            let mut entries = Vec::new();
            for i in 0..3 {
                entries.extend(labelled(&format!("({})", i + 1), &(&k[i] - &from_q[i])));
            }
            Obligation::Vanish(entries)
        }),
        ConditionDef::new("L=Q x P", Expected::Pass, || {
            let (l, from_q) = (orbital_l(), orbital_from_q(&flat_q()));
            let mut entries = Vec::new();
            for i in 0..3 {
                entries.extend(labelled(&format!("({})", i + 1), &(&l[i] - &from_q[i])));
            }
            Obligation::Vanish(entries)
        }),
    ]
}

fn transport_suite(ctx: &Context) -> Vec<ConditionDef> {
    let mut out = Vec::new();
    let (q, flat, u) = (ctx.hawton.clone(), ctx.flat.clone(), ctx.u.clone());
    let (lt2, l2) = (
        ctx.tilde.helicity_squared(),
        ctx.original.helicity_squared(),
    );
    let (flat2, l2b) = (flat.clone(), l2.clone());
    out.push(ConditionDef::new(
        "[Qhat,tilde L^2]=U[Q,L^2]U^+",
        Expected::Pass,
        move || {
            let mut entries = Vec::new();
            for i in 0..3 {
                let lhs = q[i].commutator(&lt2);
                let rhs = flat[i].commutator(&l2).unitary_conjugate(&u);
                entries.extend(labelled(&format!("({})", i + 1), &(&lhs - &rhs)));
            }
            Obligation::Vanish(entries)
        },
    ));
    out.push(ConditionDef::new("[Q,L^2]=0", Expected::Fail, move || {
        let mut entries = Vec::new();
        for i in 0..3 {
            entries.extend(labelled(
                &format!("({})", i + 1),
                &flat2[i].commutator(&l2b),
            ));
        }
        Obligation::Vanish(entries)
    }));
    out
}

/// Fixed Gaussian-damped test pairs for the quadrature oracle.
fn quadrature_pairs() -> Vec<(WaveFn, WaveFn)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0adf);
    (0..5)
        .map(|_| (random_wavefn(&mut rng), random_wavefn(&mut rng)))
        .collect()
}

/// `(g, A f) - (B g, f)` for every test pair.
fn adjoint_comparisons(a: &LinOp, b: &LinOp) -> Obligation {
    let one = Complex::new(1.0, 0.0);
    let comparisons = quadrature_pairs()
        .into_iter()
        .enumerate()
        .map(|(k, (f, g))| {
            let af = a.apply(&f);
            let bg = b.apply(&g);
            (format!("pair {k}"), vec![(one, g, af), (-one, bg, f)])
        })
        .collect();
    Obligation::Quadrature(comparisons)
}

fn adjoint_suite(ctx: &Context) -> Vec<ConditionDef> {
    let mut out = Vec::new();
    let p1q1 = compose(&momentum()[1], &ctx.flat[0]);
    let ops: Vec<(&str, LinOp, Expected)> = vec![
        ("Q1", ctx.flat[0].clone(), Expected::Pass),
        ("L1", orbital_l()[0].clone(), Expected::Pass),
        ("K1", boost_k()[0].clone(), Expected::Pass),
        ("X_P1", ctx.pryce[0].clone(), Expected::Pass),
        ("p1 Q1", p1q1, Expected::Fail),
    ];
    for (name, op, exp) in ops {
        let o = op.clone();
        out.push(ConditionDef::new(
            format!("formal-adjoint={name}"),
            exp,
            move || Obligation::Vanish(labelled("O^+-O", &(&o.formal_adjoint() - &o))),
        ));
        let o = op.clone();
        out.push(ConditionDef::new(
            format!("quadrature (g,{name} f)=({name} g,f)"),
            exp,
            move || adjoint_comparisons(&o, &o),
        ));
        if exp == Expected::Fail {
            let o = op.clone();
            out.push(ConditionDef::new(
                format!("quadrature (g,{name} f)=({name}^+ g,f)"),
                Expected::Pass,
                move || adjoint_comparisons(&o, &o.formal_adjoint()),
            ));
        }
    }
    out
}

fn suite(
    family: &'static str,
    rep: RepKind,
    operator: Option<&str>,
    conditions: Vec<ConditionDef>,
) -> SuiteDef {
    let name = match operator {
        Some(op) => format!("{family}:{op}"),
        None => family.to_string(),
    };
    SuiteDef {
        family,
        name,
        representation: rep.name(),
        operator: operator.map(str::to_string),
        conditions,
    }
}

/// Every suite in canonical order.
pub fn suite_definitions(ctx: &Context) -> Vec<SuiteDef> {
    let mut out = Vec::new();
    for kind in RepKind::ALL {
        out.push(suite("lie-algebra", kind, None, lie_algebra(ctx.rep(kind))));
    }
    out.push(suite(
        "helicity",
        RepKind::Original,
        None,
        helicity_suite(&ctx.original, true),
    ));
    out.push(suite(
        "helicity",
        RepKind::Tilde,
        None,
        helicity_suite(&ctx.tilde, false),
    ));
    for kind in RepKind::ALL {
        out.push(suite(
            "pauli-lubanski",
            kind,
            None,
            pauli_lubanski_suite(ctx.rep(kind)),
        ));
    }
    for kind in [RepKind::Hat, RepKind::Tilde] {
        out.push(suite(
            "frame",
            kind,
            None,
            frame_suite(ctx.rep(kind), &ctx.u),
        ));
    }
    for (op, kind) in [
        ("pryce", RepKind::Original),
        ("hawton", RepKind::Original),
        ("hawton", RepKind::Hat),
        ("hawton", RepKind::Tilde),
        ("flat", RepKind::Original),
    ] {
        let (expected, note) = position_expectations(op, kind).expect("listed pair");
        let x = ctx.position_operator(op).expect("known operator");
        let mut conds = position_suite(&x, ctx.rep(kind), expected);
        if let Some(note) = note {
            conds = conds.into_iter().map(|c| c.with_note(note)).collect();
        }
        out.push(suite("position", kind, Some(op), conds));
    }
    for (op, exp) in [
        ("pryce", Expected::Pass),
        ("hawton", Expected::Pass),
        ("flat", Expected::Fail),
    ] {
        let x = ctx.position_operator(op).expect("known operator");
        out.push(suite(
            "subspace",
            RepKind::Original,
            Some(op),
            subspace_suite(&x, exp),
        ));
    }
    out.push(suite(
        "rotation-witness",
        RepKind::Original,
        Some("hawton"),
        rotation_witness_suite(ctx),
    ));
    out.push(suite(
        "hawton-forms",
        RepKind::Original,
        None,
        hawton_forms_original(),
    ));
    out.push(suite(
        "hawton-forms",
        RepKind::Hat,
        Some("hawton"),
        hawton_forms_hat(ctx),
    ));
    out.push(suite(
        "transport",
        RepKind::Tilde,
        Some("hawton"),
        transport_suite(ctx),
    ));
    out.push(suite(
        "adjoint",
        RepKind::Original,
        None,
        adjoint_suite(ctx),
    ));
    out
}
