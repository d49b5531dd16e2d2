#![allow(dead_code)]

use photonloc::reps::{operator_catalog, CatalogItem};
use photonloc::{Expr, LinOp};
use rand::Rng;

/// Every single operator of the catalog, matrices promoted to
/// multiplication operators, in catalog order.
pub fn catalog_ops() -> Vec<(String, LinOp)> {
    operator_catalog()
        .into_iter()
        .filter_map(|(name, item)| match item {
            CatalogItem::Op(o) => Some((name, o)),
            CatalogItem::Matrix(m) => Some((name, LinOp::multiplicative(m))),
            _ => None,
        })
        .collect()
}

/// Random expression that stays finite off the p3 axis.
pub fn random_expr(rng: &mut impl Rng, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..6) {
            0..=2 => Expr::p(rng.gen_range(0..3)),
            3 => Expr::r(),
            4 => Expr::rho(),
            _ => Expr::rational(rng.gen_range(-4..=4), rng.gen_range(1..=3))
                .add(&Expr::i().mul(&Expr::int(rng.gen_range(-2..=2)))),
        };
    }
    let a = random_expr(rng, depth - 1);
    match rng.gen_range(0..7) {
        0 => a.add(&random_expr(rng, depth - 1)),
        1 => a.sub(&random_expr(rng, depth - 1)),
        2 | 3 => a.mul(&random_expr(rng, depth - 1)),
        4 => a.div(&if rng.gen_bool(0.5) {
            Expr::r()
        } else {
            Expr::rho()
        }),
        5 => a.powi(rng.gen_range(-2..=3)).mul(&Expr::rho().powi(2)),
        _ => Expr::p(rng.gen_range(0..3)).mul(&a).neg().exp(),
    }
}

/// Random operator: a catalog entry scaled by a random expression.
pub fn random_op(rng: &mut impl Rng, ops: &[(String, LinOp)]) -> LinOp {
    let (_, o) = &ops[rng.gen_range(0..ops.len())];
    if rng.gen_bool(0.5) {
        o.clone()
    } else {
        o.scale(&random_expr(rng, 2))
    }
}
