//! Randomized zero tests: an expression (or a family of them) is declared
//! zero when it vanishes at every sample point to within a tolerance
//! relative to the magnitude of the terms that produced it.

use num_complex::Complex;
use rayon::prelude::*;

use crate::expr::{Expr, Program};
use crate::{Error, Real};

#[derive(Clone, Debug, PartialEq)]
pub struct Witness<T> {
    pub point: [T; 3],
    /// Label of the offending entry, e.g. `A[1][2]` or `b[3]`.
    pub entry: String,
    pub value: Complex<T>,
    /// Local term scale the value was judged against.
    pub scale: T,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ZeroTest<T> {
    Pass,
    Fail(Witness<T>),
}

impl<T> ZeroTest<T> {
    pub fn passed(&self) -> bool {
        matches!(self, ZeroTest::Pass)
    }

    pub fn witness(&self) -> Option<&Witness<T>> {
        match self {
            ZeroTest::Pass => None,
            ZeroTest::Fail(w) => Some(w),
        }
    }
}

/// `|value| <= tol * (1 + scale)`.
pub fn negligible<T: Real>(value: Complex<T>, scale: T, tol: T) -> bool {
    value.norm() <= tol * (T::one() + scale)
}

/// Zero-tests every labelled expression at every point. The reported witness
/// is the first violation in point order, then entry order, regardless of
/// how the evaluation was scheduled.
pub fn exprs_vanish<T: Real>(
    entries: &[(String, Expr)],
    points: &[[T; 3]],
    tol: T,
) -> Result<ZeroTest<T>, Error> {
    let live: Vec<&(String, Expr)> = entries.iter().filter(|(_, e)| !e.is_zero()).collect();
    if live.is_empty() {
        return Ok(ZeroTest::Pass);
    }
    let exprs: Vec<Expr> = live.iter().map(|(_, e)| e.clone()).collect();
    let program = Program::compile(&exprs);
    let first = points.par_iter().find_map_first(|&pt| {
        let vals = match program.eval(pt) {
            Ok(v) => v,
            Err(e) => return Some(Err(e)),
        };
        vals.iter()
            .zip(&live)
            .find(|(v, _)| !negligible(v.value, v.scale, tol))
            .map(|(v, (label, _))| {
                Ok(Witness {
                    point: pt,
                    entry: label.clone(),
                    value: v.value,
                    scale: v.scale,
                })
            })
    });
    match first {
        None => Ok(ZeroTest::Pass),
        Some(Ok(w)) => Ok(ZeroTest::Fail(w)),
        Some(Err(e)) => Err(e),
    }
}
