//! Verification harness: every operator identity claimed for the three
//! representations, encoded with its expected outcome and decided by
//! randomized zero tests.
//!
//! A condition is an obligation (a family of expressions that should
//! vanish, a classification, or a quadrature comparison) together with the
//! outcome the claim predicts. Conditions the claims are silent on are
//! `informational` and never affect the verdict.

pub mod quadrature;
mod report;
mod suites;

pub use quadrature::{inner_product, inner_product_combination, InnerProductEstimate};
pub use report::{ConditionReport, Report, ReportConfig, SuiteReport, Verdict, WitnessReport};
pub use suites::{suite_definitions, Context, SUITE_NAMES};

use std::fmt;

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{exprs_vanish, WaveFn, ZeroTest};
use crate::expr::Expr;
use crate::reps::{subspace_membership, RepKind, Subspace};
use crate::sampling::{stream_seed, SamplePlan};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Passed because the obligation is identically zero by construction.
    VacuousPass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expected {
    Pass,
    Fail,
    Informational,
}

impl Expected {
    pub fn matches(self, status: Status) -> bool {
        match self {
            Expected::Pass => matches!(status, Status::Pass | Status::VacuousPass),
            Expected::Fail => status == Status::Fail,
            Expected::Informational => true,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::VacuousPass => "vacuous-pass",
        })
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expected::Pass => "pass",
            Expected::Fail => "fail",
            Expected::Informational => "informational",
        })
    }
}

/// Harness configuration. The defaults reproduce the canonical report.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub plan: SamplePlan,
    pub tolerance: f64,
    /// Monte Carlo sample count for the adjoint oracle.
    pub quadrature_samples: usize,
    /// Multiple of the standard error accepted by the adjoint oracle.
    pub quadrature_sigmas: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            plan: SamplePlan::default(),
            tolerance: 1e-9,
            quadrature_samples: 100_000,
            quadrature_sigmas: 3.0,
        }
    }
}

/// Which suites to run. `None` fields select everything.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Selection {
    pub suite: Option<String>,
    pub representation: Option<RepKind>,
    pub operator: Option<String>,
}

impl Selection {
    pub fn all() -> Selection {
        Selection::default()
    }

    fn admits(&self, suite: &SuiteDef) -> bool {
        let suite_ok = self
            .suite
            .as_deref()
            .is_none_or(|s| s == "all" || s == suite.family);
        let rep_ok = self
            .representation
            .is_none_or(|r| suite.representation == r.name());
        let op_ok = match (&self.operator, &suite.operator) {
            (None, _) => true,
            (Some(want), Some(have)) => want == have,
            (Some(_), None) => false,
        };
        suite_ok && rep_ok && op_ok
    }
}

/// Terms `c_k (f_k, g_k)` of one quadrature comparison.
pub type QuadratureTerms = Vec<(Complex<f64>, WaveFn, WaveFn)>;

/// What a condition checks.
pub enum Obligation {
    /// Every labelled expression vanishes at every sample point.
    Vanish(Vec<(String, Expr)>),
    /// Like `Vanish`, but reported as vacuous when every expression is the
    /// structural zero.
    VanishOrVacuous(Vec<(String, Expr)>),
    /// The wavefunction falls in the given subspace.
    Classify(WaveFn, Subspace),
    /// `Σ_k c_k (f_k, g_k) = 0` within the configured number of standard
    /// errors; each entry is one independent comparison.
    Quadrature(Vec<(String, QuadratureTerms)>),
}

type Builder = Box<dyn Fn() -> Obligation + Send + Sync>;

pub struct ConditionDef {
    pub id: String,
    pub expected: Expected,
    pub note: Option<String>,
    build: Builder,
}

impl ConditionDef {
    pub fn new(
        id: impl Into<String>,
        expected: Expected,
        build: impl Fn() -> Obligation + Send + Sync + 'static,
    ) -> ConditionDef {
        ConditionDef {
            id: id.into(),
            expected,
            note: None,
            build: Box::new(build),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> ConditionDef {
        self.note = Some(note.into());
        self
    }

    pub fn obligation(&self) -> Obligation {
        (self.build)()
    }
}

pub struct SuiteDef {
    /// Suite family, the value matched by `--suite`.
    pub family: &'static str,
    /// Display name, unique within a report.
    pub name: String,
    pub representation: &'static str,
    pub operator: Option<String>,
    pub conditions: Vec<ConditionDef>,
}

impl SuiteDef {
    /// Sample-stream label of a condition.
    pub fn stream_label(&self, condition: &ConditionDef) -> String {
        format!("{}/{}/{}", self.name, self.representation, condition.id)
    }
}

fn run_condition(
    suite: &SuiteDef,
    cond: &ConditionDef,
    config: &VerifyConfig,
) -> Result<ConditionReport, Error> {
    let label = suite.stream_label(cond);
    let plan = config.plan.for_label(&label);
    let points = plan.points()?;
    let mut samples = plan.count;
    let (status, witness) = match cond.obligation() {
        Obligation::Vanish(entries) => zero_status(&entries, &points, config.tolerance, false)?,
        Obligation::VanishOrVacuous(entries) => {
            zero_status(&entries, &points, config.tolerance, true)?
        }
        Obligation::Classify(f, want) => {
            let got = subspace_membership(&f, &points, config.tolerance)?;
            if got == want {
                (Status::Pass, None)
            } else {
                let w = WitnessReport {
                    point: None,
                    entry: format!("classified {got:?}, expected {want:?}").to_lowercase(),
                    value: [0.0, 0.0],
                    scale: None,
                };
                (Status::Fail, Some(w))
            }
        }
        Obligation::Quadrature(comparisons) => {
            samples = config.quadrature_samples;
            let mut outcome = (Status::Pass, None);
            for (tag, terms) in &comparisons {
                let refs: Vec<(Complex<f64>, &WaveFn, &WaveFn)> =
                    terms.iter().map(|(c, f, g)| (*c, f, g)).collect();
                let seed = stream_seed(plan.seed, tag);
                let est = inner_product_combination(&refs, seed, config.quadrature_samples)?;
                if !est.within(Complex::new(0.0, 0.0), config.quadrature_sigmas) {
                    outcome = (
                        Status::Fail,
                        Some(WitnessReport {
                            point: None,
                            entry: tag.clone(),
                            value: [est.value.re, est.value.im],
                            scale: Some(est.std_error),
                        }),
                    );
                    break;
                }
            }
            outcome
        }
    };
    Ok(ConditionReport {
        suite: suite.name.clone(),
        representation: suite.representation.to_string(),
        condition: cond.id.clone(),
        status,
        expected: cond.expected,
        witness,
        tolerance: config.tolerance,
        samples,
        seed: plan.seed,
        note: cond.note.clone(),
    })
}

fn zero_status(
    entries: &[(String, Expr)],
    points: &[[f64; 3]],
    tol: f64,
    vacuous_allowed: bool,
) -> Result<(Status, Option<WitnessReport>), Error> {
    if vacuous_allowed && entries.iter().all(|(_, e)| e.is_zero()) {
        return Ok((Status::VacuousPass, None));
    }
    Ok(match exprs_vanish(entries, points, tol)? {
        ZeroTest::Pass => (Status::Pass, None),
        ZeroTest::Fail(w) => (Status::Fail, Some(WitnessReport::from(&w))),
    })
}

/// Runs the selected suites. Conditions run in parallel; the report is in
/// definition order and independent of scheduling.
pub fn run(config: &VerifyConfig, selection: &Selection) -> Result<Report, Error> {
    config.plan.validate()?;
    let ctx = Context::new();
    let suites: Vec<SuiteDef> = suite_definitions(&ctx)
        .into_iter()
        .filter(|s| selection.admits(s))
        .collect();
    let jobs: Vec<(usize, usize)> = suites
        .iter()
        .enumerate()
        .flat_map(|(si, s)| (0..s.conditions.len()).map(move |ci| (si, ci)))
        .collect();
    let results: Vec<ConditionReport> = jobs
        .par_iter()
        .map(|&(si, ci)| run_condition(&suites[si], &suites[si].conditions[ci], config))
        .collect::<Result<_, _>>()?;
    let mut iter = results.into_iter();
    let suite_reports = suites
        .iter()
        .map(|s| SuiteReport {
            name: s.name.clone(),
            representation: s.representation.to_string(),
            conditions: iter.by_ref().take(s.conditions.len()).collect(),
        })
        .collect();
    Ok(Report::new(config, suite_reports))
}

/// Runs every suite.
pub fn full_report(config: &VerifyConfig) -> Result<Report, Error> {
    run(config, &Selection::all())
}
