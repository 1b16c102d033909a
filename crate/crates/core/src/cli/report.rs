use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::model::ModelParams;

/// One verified property.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub name: String,
    /// The formula or statement the check reproduces.
    pub anchor: String,
    /// `None` for parameter-independent checks.
    pub params: Option<ModelParams>,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Worst case behind the residual, when there is one worth naming.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub wall_time_s: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    /// Parameter sets outside the validated regime and similar notes.
    pub warnings: Vec<String>,
}

impl VerificationReport {
    pub(crate) fn new(checks: Vec<CheckRecord>, warnings: Vec<String>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let summary = Summary { total: checks.len(), passed, failed: checks.len() - passed };
        VerificationReport { checks, summary, warnings }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// The same report with every wall time zeroed; two runs of one
    /// configuration serialize identically after this.
    pub fn without_timing(&self) -> Self {
        let mut out = self.clone();
        for c in &mut out.checks {
            c.wall_time_s = 0.0;
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report fields are plain data")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<6} {:<15} {:<52} {:<28} {:>10} {:>8} {:>8}",
            "status", "suite", "check", "params", "residual", "tol", "time/s"
        );
        for c in &self.checks {
            let params = match &c.params {
                Some(p) => format!("k={:.4},a={},b={},w={}", p.k, p.a, p.b, p.omega),
                None => "-".to_string(),
            };
            let _ = writeln!(
                s,
                "{:<6} {:<15} {:<52} {:<28} {:>10.3e} {:>8.1e} {:>8.2}",
                if c.pass { "PASS" } else { "FAIL" },
                c.suite,
                c.name,
                params,
                c.residual,
                c.tolerance,
                c.wall_time_s
            );
            if !c.pass {
                let _ = writeln!(s, "       anchor: {}", c.anchor);
                if let Some(d) = &c.detail {
                    let _ = writeln!(s, "       worst: {d}");
                }
            }
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        let _ = writeln!(
            s,
            "{} checks, {} passed, {} failed",
            self.summary.total, self.summary.passed, self.summary.failed
        );
        s
    }
}
