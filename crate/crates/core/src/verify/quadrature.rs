//! Monte Carlo estimates of the flat scalar product
//! `(f, g) = Σ_i ∫ f_i*(p) g_i(p) d³p`, used as an independent oracle for
//! formal adjoints.
//!
//! Points are drawn from the normal density `q(p) = π^{-3/2} exp(-r²)`,
//! which matches the Gaussian damping of the catalog wavefunctions.

use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::WaveFn;
use crate::expr::{Expr, Program};
use crate::{Complex64, Error, Point64};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InnerProductEstimate {
    pub value: Complex64,
    /// Standard error of the complex mean, `sqrt(Var(re) + Var(im)) / sqrt(n)`.
    pub std_error: f64,
    pub samples: usize,
}

impl InnerProductEstimate {
    /// `|value - target| <= k · std_error`.
    pub fn within(&self, target: Complex64, k: f64) -> bool {
        (self.value - target).norm() <= k * self.std_error
    }
}

fn draw_points(seed: u64, n: usize) -> Vec<Point64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, std::f64::consts::FRAC_1_SQRT_2).unwrap();
    (0..n)
        .map(|_| {
            [
                normal.sample(&mut rng),
                normal.sample(&mut rng),
                normal.sample(&mut rng),
            ]
        })
        .collect()
}

/// Estimates `Σ_k c_k (f_k, g_k)` with every term evaluated on the same
/// sample, so that correlated noise cancels in differences.
pub fn inner_product_combination(
    terms: &[(Complex64, &WaveFn, &WaveFn)],
    seed: u64,
    n: usize,
) -> Result<InnerProductEstimate, Error> {
    for (_, f, g) in terms {
        f.is_damped()?;
        g.is_damped()?;
    }
    let exprs: Vec<Expr> = terms
        .iter()
        .flat_map(|(_, f, g)| f.0.iter().chain(g.0.iter()).cloned())
        .collect();
    let program = Program::compile(&exprs);
    let norm = std::f64::consts::PI.powf(1.5);
    let points = draw_points(seed, n);
    let values: Vec<Complex64> = points
        .par_iter()
        .map(|&pt| -> Result<Complex64, Error> {
            let vals = program.eval_values(pt)?;
            let r2 = pt.iter().map(|x| x * x).sum::<f64>();
            let weight = norm * r2.exp();
            let mut acc = Complex::new(0.0, 0.0);
            for (t, (c, _, _)) in terms.iter().enumerate() {
                let base = 6 * t;
                let dot: Complex64 = (0..3)
                    .map(|i| vals[base + i].conj() * vals[base + 3 + i])
                    .sum();
                acc += c * dot;
            }
            Ok(acc * weight)
        })
        .collect::<Result<_, _>>()?;
    let count = values.len() as f64;
    let mean = values.iter().sum::<Complex64>() / count;
    let var = if values.len() > 1 {
        values.iter().map(|v| (v - mean).norm_sqr()).sum::<f64>() / (count - 1.0)
    } else {
        f64::INFINITY
    };
    Ok(InnerProductEstimate {
        value: mean,
        std_error: (var / count).sqrt(),
        samples: values.len(),
    })
}

/// Monte Carlo estimate of `(f, g)`. Both functions must carry a damping
/// factor in every nonzero component.
pub fn inner_product(
    f: &WaveFn,
    g: &WaveFn,
    seed: u64,
    n: usize,
) -> Result<InnerProductEstimate, Error> {
    inner_product_combination(&[(Complex::new(1.0, 0.0), f, g)], seed, n)
}
