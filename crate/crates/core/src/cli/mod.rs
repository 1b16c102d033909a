//! Verification driver: configuration, suite orchestration and reports.

mod checks;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};
use crate::model::ModelParams;

pub use report::{CheckRecord, Summary, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Specfun,
    Model,
    Algebra,
    Irreps,
    SpecialCases,
    All,
}

impl Suite {
    /// Execution order; `All` expands to every other suite.
    pub const ORDERED: [Suite; 5] = [Suite::Specfun, Suite::Model, Suite::Algebra, Suite::Irreps, Suite::SpecialCases];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Specfun => "specfun",
            Suite::Model => "model",
            Suite::Algebra => "algebra",
            Suite::Irreps => "irreps",
            Suite::SpecialCases => "special-cases",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ORDERED
            .iter()
            .chain(&[Suite::All])
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Truncation {
    pub nmax_radial: usize,
    pub nmax_sector: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadratureOrders {
    pub radial: usize,
    pub angular: usize,
    /// Order of both rules on the grids of cross-sector matrix blocks.
    pub cross: usize,
}

/// Tolerance keys and their defaults.
pub const DEFAULT_TOLERANCES: [(&str, f64); 17] = [
    ("log_gamma", 1e-13),
    ("series", 1e-10),
    ("derivative", 1e-6),
    ("quadrature", 1e-12),
    ("formula", 1e-12),
    ("orthonormality", 1e-9),
    ("eigenvalue", 1e-8),
    ("algebra", 1e-8),
    ("hermiticity", 1e-9),
    ("spectrum", 1e-8),
    ("ladder", 1e-8),
    ("pointwise", 1e-9),
    ("overlap", 1e-9),
    ("casimir", 1e-7),
    ("susy", 1e-10),
    ("riccati", 1e-10),
    ("special_cases", 1e-9),
];

/// Keys outside the table above with their defaults: the Riccati control
/// is recorded as the inverse of the perturbed residual, and the
/// oscillator realization has its own bound.
const EXTRA_TOLERANCES: [(&str, f64); 2] = [("riccati_control", 1e3), ("oscillator", 1e-12)];

fn default_tolerances() -> BTreeMap<String, f64> {
    DEFAULT_TOLERANCES.iter().chain(&EXTRA_TOLERANCES).map(|(k, v)| (k.to_string(), *v)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub params: Vec<ModelParams>,
    pub truncation: Truncation,
    pub quadrature: QuadratureOrders,
    /// Overrides of [`DEFAULT_TOLERANCES`]; missing keys keep the default.
    pub tolerances: BTreeMap<String, f64>,
    pub suites: Vec<Suite>,
    pub seed: u64,
    /// Random points per special-case comparison.
    pub sample_points: usize,
    /// Angles at which the Riccati equation is evaluated.
    pub riccati_angles: usize,
    /// Boson level cutoff of the oscillator realization.
    pub oscillator_cutoff: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        let p = |k, a, b| ModelParams { k, a, b, omega: 1.0 };
        SuiteConfig {
            params: vec![p(1.0, 1.0, 1.0), p(2.0, 1.5, 2.5), p(3.0, 2.0, 2.0), p(std::f64::consts::SQRT_2, 1.2, 0.8)],
            truncation: Truncation { nmax_radial: 8, nmax_sector: 6 },
            quadrature: QuadratureOrders { radial: 80, angular: 80, cross: 32 },
            tolerances: default_tolerances(),
            suites: vec![Suite::All],
            seed: 20_240_917,
            sample_points: 200,
            riccati_angles: 50,
            oscillator_cutoff: 12,
        }
    }
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let mut c: SuiteConfig = serde_json::from_str(text).map_err(|e| Error::Usage(format!("bad config: {e}")))?;
        let mut tol = default_tolerances();
        for (k, v) in std::mem::take(&mut c.tolerances) {
            if !tol.contains_key(&k) {
                return usage(format!("unknown tolerance key '{k}'"));
            }
            tol.insert(k, v);
        }
        c.tolerances = tol;
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        if self.params.is_empty() {
            return usage("at least one parameter set is required");
        }
        for p in &self.params {
            p.validate().map_err(|e| Error::Usage(e.to_string()))?;
        }
        if self.truncation.nmax_radial < 2 || self.truncation.nmax_sector < 2 {
            return usage("truncation must be at least (2, 2)");
        }
        let q = &self.quadrature;
        if q.radial == 0 || q.angular == 0 || q.cross == 0 {
            return usage("quadrature orders must be positive");
        }
        for (k, v) in &self.tolerances {
            if !(v.is_finite() && *v > 0.0) {
                return usage(format!("tolerance '{k}' must be positive, got {v}"));
            }
        }
        for (k, _) in DEFAULT_TOLERANCES.iter().chain(&EXTRA_TOLERANCES) {
            if !self.tolerances.contains_key(*k) {
                return usage(format!("missing tolerance '{k}'"));
            }
        }
        if self.suites.is_empty() {
            return usage("no suites selected");
        }
        if self.sample_points == 0 || self.riccati_angles == 0 {
            return usage("sample counts must be positive");
        }
        if self.oscillator_cutoff < 4 {
            return usage("oscillator cutoff must be at least 4");
        }
        Ok(())
    }

    /// Selected suites in execution order.
    pub fn selected(&self) -> Vec<Suite> {
        if self.suites.contains(&Suite::All) {
            return Suite::ORDERED.to_vec();
        }
        Suite::ORDERED.iter().copied().filter(|s| self.suites.contains(s)).collect()
    }

    pub(crate) fn tol(&self, key: &str) -> f64 {
        self.tolerances[key]
    }
}

/// Runs the selected suites. Failed checks are recorded, never fatal.
pub fn run(config: &SuiteConfig) -> Result<VerificationReport> {
    config.validate()?;
    checks::run(config)
}
