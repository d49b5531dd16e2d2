use serde::{Deserialize, Serialize};

use super::{Expected, Status, VerifyConfig};
use crate::algebra::Witness;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// Sample point; absent for quadrature and classification failures.
    pub point: Option<[f64; 3]>,
    pub entry: String,
    /// `[re, im]`.
    pub value: [f64; 2],
    /// Term scale for zero tests, standard error for quadrature.
    pub scale: Option<f64>,
}

impl From<&Witness<f64>> for WitnessReport {
    fn from(w: &Witness<f64>) -> Self {
        WitnessReport {
            point: Some(w.point),
            entry: w.entry.clone(),
            value: [w.value.re, w.value.im],
            scale: Some(w.scale),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub suite: String,
    pub representation: String,
    pub condition: String,
    pub status: Status,
    pub expected: Expected,
    pub witness: Option<WitnessReport>,
    pub tolerance: f64,
    pub samples: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl ConditionReport {
    pub fn matches(&self) -> bool {
        self.expected.matches(self.status)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub representation: String,
    pub conditions: Vec<ConditionReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub shell: [f64; 2],
    pub axis_margin: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub success: bool,
    pub conditions: usize,
    pub mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: ReportConfig,
    pub suites: Vec<SuiteReport>,
    pub verdict: Verdict,
}

impl Report {
    pub(super) fn new(config: &VerifyConfig, suites: Vec<SuiteReport>) -> Report {
        let all = suites.iter().flat_map(|s| &s.conditions);
        let conditions = all.clone().count();
        let mismatches = all.filter(|c| !c.matches()).count();
        Report {
            config: ReportConfig {
                seed: config.plan.seed,
                samples: config.plan.count,
                tolerance: config.tolerance,
                shell: [config.plan.shell.0, config.plan.shell.1],
                axis_margin: config.plan.axis_margin,
            },
            suites,
            verdict: Verdict {
                success: mismatches == 0,
                conditions,
                mismatches,
            },
        }
    }

    pub fn conditions(&self) -> impl Iterator<Item = &ConditionReport> {
        self.suites.iter().flat_map(|s| &s.conditions)
    }

    pub fn find(&self, suite: &str, condition: &str) -> Option<&ConditionReport> {
        self.conditions()
            .find(|c| c.suite == suite && c.condition == condition)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per condition, then the verdict.
    pub fn to_summary(&self) -> String {
        let mut out = String::new();
        for c in self.conditions() {
            let mark = if c.matches() { "ok" } else { "MISMATCH" };
            out.push_str(&format!(
                "{:<8} {} [{}] {}: {} (expected {})\n",
                mark, c.suite, c.representation, c.condition, c.status, c.expected
            ));
        }
        out.push_str(&format!(
            "verdict: {} ({} conditions, {} mismatches)\n",
            if self.verdict.success {
                "success"
            } else {
                "failure"
            },
            self.verdict.conditions,
            self.verdict.mismatches
        ));
        out
    }
}
