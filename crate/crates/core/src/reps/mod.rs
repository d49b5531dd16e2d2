//! Generators, helicity and position operators of the three unitary
//! representations on `L²(R³, C³)` with the flat measure `d³p`.
//!
//! * original: `P^μ = p^μ`, `M = L + S`, `N = K + n`;
//! * hat: `U L U†`, `U K U†`, a triplet of spinless massless particles;
//! * tilde: `U M U†`, `U N U†`, unitarily equivalent to the original.
//!
//! `U(p)` has the spherical frame `(θ̂, φ̂, p̂)` as columns; it is real and
//! undefined on the p3 axis.
//!
//! Parity and time reversal of the transported representations are the
//! transported involutions `U Π U†` and `U Θ U†`. Since `U` is real both act
//! as `f ↦ V(p) f(-p)` (resp. `V(p) f*(-p)`) with the same twist
//! `V(p) = U(p) Uᵀ(-p)`, and `V(p) V(-p) = 1` follows from `Uᵀ U = 1`.

mod catalog;

pub use catalog::*;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{LinOp, MatFn, VecFn, WaveFn};
use crate::expr::Expr;
use crate::{Error, Real};

fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// `ε_{ijk}` for 0-based indices.
pub fn epsilon(i: usize, j: usize, k: usize) -> i64 {
    levi_civita(i, j, k)
}

/// `Σ_{j,k} ε_{ijk} x_j y_k` for operator-valued components combined by
/// `pair`.
pub(crate) fn cross_component<X, Y>(
    i: usize,
    x: &[X; 3],
    y: &[Y; 3],
    pair: impl Fn(&X, &Y) -> LinOp,
) -> LinOp {
    let mut out = LinOp::zero();
    for j in 0..3 {
        for k in 0..3 {
            let e = epsilon(i, j, k);
            if e != 0 {
                out = &out + &pair(&x[j], &y[k]).scale(&Expr::int(e));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepKind {
    /// `(P, M, N)`.
    Original,
    /// The spinless generator pair `(P, L, K)` of the original space.
    Auxiliary,
    /// `(P, U L U†, U K U†)`.
    Hat,
    /// `(P, U M U†, U N U†)`.
    Tilde,
}

impl RepKind {
    pub const ALL: [RepKind; 4] = [
        RepKind::Original,
        RepKind::Auxiliary,
        RepKind::Hat,
        RepKind::Tilde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RepKind::Original => "original",
            RepKind::Auxiliary => "auxiliary",
            RepKind::Hat => "hat",
            RepKind::Tilde => "tilde",
        }
    }

    pub fn parse(s: &str) -> Option<RepKind> {
        RepKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named bundle of Poincaré generators with its discrete symmetries and
/// helicity operator.
#[derive(Clone, Debug)]
pub struct Representation {
    pub kind: RepKind,
    /// `P^0, P^1, P^2, P^3`.
    pub momentum: [LinOp; 4],
    pub rotations: [LinOp; 3],
    pub boosts: [LinOp; 3],
    /// `Π f = V(p) f(-p)`.
    pub parity_twist: MatFn,
    /// `Θ f = V(p) f*(-p)`.
    pub timerev_twist: MatFn,
    pub helicity: LinOp,
}

impl Representation {
    pub fn build(kind: RepKind) -> Representation {
        let momentum = momentum();
        match kind {
            RepKind::Original => Representation {
                kind,
                momentum,
                rotations: rotations_m(),
                boosts: boosts_n(),
                parity_twist: MatFn::identity(),
                timerev_twist: MatFn::identity(),
                helicity: helicity_original(),
            },
            RepKind::Auxiliary => Representation {
                kind,
                momentum,
                rotations: orbital_l(),
                boosts: boost_k(),
                parity_twist: MatFn::identity(),
                timerev_twist: MatFn::identity(),
                helicity: LinOp::zero(),
            },
            RepKind::Hat | RepKind::Tilde => {
                let u = u_matrix();
                let (rot, boost) = if kind == RepKind::Hat {
                    (orbital_l(), boost_k())
                } else {
                    (rotations_m(), boosts_n())
                };
                let twist = u.mul(&u.transpose().substitute_neg());
                let helicity = if kind == RepKind::Hat {
                    LinOp::zero()
                } else {
                    helicity_original().unitary_conjugate(&u)
                };
                // U commutes with multiplication by p^μ, so P̂ = P̃ = P
                Representation {
                    kind,
                    momentum,
                    rotations: rot.map(|g| g.unitary_conjugate(&u)),
                    boosts: boost.map(|g| g.unitary_conjugate(&u)),
                    parity_twist: twist.clone(),
                    timerev_twist: twist,
                    helicity,
                }
            }
        }
    }

    /// The ten generators with their conventional names.
    pub fn generators(&self) -> Vec<(String, LinOp)> {
        let mut out = Vec::with_capacity(10);
        for (mu, p) in self.momentum.iter().enumerate() {
            out.push((format!("P{mu}"), p.clone()));
        }
        for (i, j) in self.rotations.iter().enumerate() {
            out.push((format!("J{}", i + 1), j.clone()));
        }
        for (i, b) in self.boosts.iter().enumerate() {
            out.push((format!("B{}", i + 1), b.clone()));
        }
        out
    }

    /// `Λ²`, the projector onto helicity ±1 states (zero for spinless
    /// representations).
    pub fn helicity_squared(&self) -> LinOp {
        compose_ok(&self.helicity, &self.helicity)
    }

    /// Pauli–Lubanski operators `W^0 = P·J`, `W = P^0 J + P × B`.
    ///
    /// The cross-product sign is the one for which the spinless pair
    /// `(L, K)` gives `W = 0` and the original representation gives
    /// `W = Λ P`, with the boost convention `[B^i, p^j] = i δ^{ij} p^0`.
    pub fn pauli_lubanski(&self) -> [LinOp; 4] {
        let p = &self.momentum;
        let spatial = [p[1].clone(), p[2].clone(), p[3].clone()];
        let w0 = (0..3).fold(LinOp::zero(), |acc, i| {
            &acc + &compose_ok(&spatial[i], &self.rotations[i])
        });
        let wi = |i: usize| {
            let first = compose_ok(&p[0], &self.rotations[i]);
            let cross = cross_component(i, &spatial, &self.boosts, compose_ok);
            &first + &cross
        };
        [w0, wi(0), wi(1), wi(2)]
    }

    pub fn helicity_op(&self) -> &LinOp {
        &self.helicity
    }
}

pub(crate) fn compose_ok(a: &LinOp, b: &LinOp) -> LinOp {
    a.compose(b)
        .expect("catalog products always have a multiplicative scalar factor")
}

/// Helicity operator of a representation.
pub fn helicity(rep: &Representation) -> LinOp {
    rep.helicity.clone()
}

pub fn pauli_lubanski(rep: &Representation) -> [LinOp; 4] {
    rep.pauli_lubanski()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subspace {
    /// `p · f = 0`: helicity ±1.
    Transverse,
    /// `f = c(p) p`: helicity 0.
    Longitudinal,
    Mixed,
    /// Both tests vanish.
    Zero,
}

/// Classifies `f` by zero-testing `p · f` and `p × f`.
pub fn subspace_membership<T: Real>(
    f: &WaveFn,
    points: &[[T; 3]],
    tol: T,
) -> Result<Subspace, Error> {
    let p = p_vec();
    let dot = [("p.f".to_string(), f.dot(&p))];
    let transverse = crate::algebra::exprs_vanish(&dot, points, tol)?.passed();
    let longitudinal =
        crate::algebra::exprs_vanish(&f.cross_from_left(&p).entries("pxf"), points, tol)?.passed();
    Ok(match (transverse, longitudinal) {
        (true, true) => Subspace::Zero,
        (true, false) => Subspace::Transverse,
        (false, true) => Subspace::Longitudinal,
        (false, false) => Subspace::Mixed,
    })
}

/// `(p1, p2, p3)`.
pub fn p_vec() -> VecFn {
    [Expr::p(0), Expr::p(1), Expr::p(2)]
}

/// `π = p / r`.
pub fn pi_vec() -> VecFn {
    let r = Expr::r();
    std::array::from_fn(|i| Expr::p(i).div(&r))
}

#[cfg(test)]
mod tests;
