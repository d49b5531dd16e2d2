//! Seeded sample points in a spherical shell, kept away from the p3 axis
//! where the polarization frame is undefined.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Point64};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplePlan {
    pub seed: u64,
    pub count: usize,
    /// Radial bounds `(r_min, r_max)`.
    pub shell: (f64, f64),
    /// Minimum allowed `rho / r`.
    pub axis_margin: f64,
}

impl Default for SamplePlan {
    fn default() -> Self {
        SamplePlan {
            seed: 0,
            count: 64,
            shell: (0.5, 2.0),
            axis_margin: 0.1,
        }
    }
}

impl SamplePlan {
    pub fn validate(&self) -> Result<(), Error> {
        let (lo, hi) = self.shell;
        if !(lo > 0.0 && lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(Error::InvalidPlan(format!(
                "shell must satisfy 0 < r_min <= r_max, got ({lo}, {hi})"
            )));
        }
        if !(self.axis_margin > 0.0 && self.axis_margin < 1.0) {
            return Err(Error::InvalidPlan(format!(
                "axis margin must lie in (0, 1), got {}",
                self.axis_margin
            )));
        }
        Ok(())
    }

    /// Same plan on an independent stream keyed by `label`.
    pub fn for_label(&self, label: &str) -> SamplePlan {
        SamplePlan {
            seed: stream_seed(self.seed, label),
            ..*self
        }
    }

    pub fn points(&self) -> Result<Vec<Point64>, Error> {
        sample_points(self)
    }
}

/// Mixes a global seed with a label into a per-stream seed (FNV-1a over the
/// label, then a splitmix64 finalizer). Stable across platforms and builds.
pub fn stream_seed(seed: u64, label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut z = seed ^ h;
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Radius uniform in the shell, direction uniform on the sphere with the
/// polar caps `rho < axis_margin * r` rejected.
pub fn sample_points(plan: &SamplePlan) -> Result<Vec<Point64>, Error> {
    plan.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(plan.seed);
    let (lo, hi) = plan.shell;
    let cos_max = (1.0 - plan.axis_margin * plan.axis_margin).sqrt();
    let mut out = Vec::with_capacity(plan.count);
    while out.len() < plan.count {
        let cos_t: f64 = rng.gen_range(-1.0..=1.0);
        let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let radius = if hi > lo { rng.gen_range(lo..=hi) } else { lo };
        if cos_t.abs() > cos_max {
            continue;
        }
        let sin_t = (1.0 - cos_t * cos_t).sqrt();
        let p = [
            radius * sin_t * phi.cos(),
            radius * sin_t * phi.sin(),
            radius * cos_t,
        ];
        let rho = p[0].hypot(p[1]);
        let r = (rho * rho + p[2] * p[2]).sqrt();
        // rounding can push a boundary draw just outside the constraints
        if rho < plan.axis_margin * r || r < lo || r > hi {
            continue;
        }
        out.push(p);
    }
    Ok(out)
}
