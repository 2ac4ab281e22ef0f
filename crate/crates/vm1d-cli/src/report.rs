//! Verification report types and the suite runner.

use serde::Serialize;

use crate::suites;
use vm1d_core::Error;

/// A single property check over a stated grid.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    /// Property identifier, e.g. `bounds.bracket_containment`.
    pub id: String,
    /// Human-readable description of the grid swept.
    pub grid: String,
    /// Worst violation observed (≤ 0 means the inequality held with margin).
    pub worst_violation: f64,
    /// Where the worst violation occurred.
    pub worst_at: String,
    /// Slack the check is allowed.
    pub tolerance: f64,
    pub pass: bool,
}

/// Observations that are reported but never affect the exit status
/// (claims the underlying theory leaves open).
#[derive(Clone, Debug, Serialize)]
pub struct ExploratoryItem {
    pub id: String,
    pub observation: String,
}

/// Stable report schema: `{suite, checks[], exploratory[], version}`.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub exploratory: Vec<ExploratoryItem>,
    pub version: String,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Deliberate perturbations for harness self-tests: prove that a broken
/// bound is caught and located.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FaultInjection {
    #[default]
    None,
    /// Shift the pinch upper bound down by 1e-3.
    BoundsUpperShift,
}

/// Accumulates the worst violation over a grid sweep.
pub struct CheckAcc {
    id: String,
    grid: String,
    tolerance: f64,
    worst: f64,
    worst_at: String,
}

impl CheckAcc {
    pub fn new(id: impl Into<String>, grid: impl Into<String>, tolerance: f64) -> Self {
        CheckAcc {
            id: id.into(),
            grid: grid.into(),
            tolerance,
            worst: f64::NEG_INFINITY,
            worst_at: String::new(),
        }
    }

    /// Record one measurement; `violation > tolerance` at the end fails
    /// the check. NaN poisons the check (treated as +∞ violation).
    pub fn observe(&mut self, violation: f64, at: impl FnOnce() -> String) {
        let v = if violation.is_nan() { f64::INFINITY } else { violation };
        if v > self.worst {
            self.worst = v;
            self.worst_at = at();
        }
    }

    pub fn into_result(self) -> CheckResult {
        let pass = self.worst <= self.tolerance;
        CheckResult {
            id: self.id,
            grid: self.grid,
            worst_violation: self.worst,
            worst_at: self.worst_at,
            tolerance: self.tolerance,
            pass,
        }
    }
}

/// The verification suites, in the order `--suite all` runs them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    Bounds,
    Ode,
    Recursion,
    Convexity,
    Ratio,
    Fourier,
    Avg,
    Pairs,
    Delta,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 9] = [
        SuiteKind::Bounds,
        SuiteKind::Ode,
        SuiteKind::Recursion,
        SuiteKind::Convexity,
        SuiteKind::Ratio,
        SuiteKind::Fourier,
        SuiteKind::Avg,
        SuiteKind::Pairs,
        SuiteKind::Delta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Bounds => "bounds",
            SuiteKind::Ode => "ode",
            SuiteKind::Recursion => "recursion",
            SuiteKind::Convexity => "convexity",
            SuiteKind::Ratio => "ratio",
            SuiteKind::Fourier => "fourier",
            SuiteKind::Avg => "avg",
            SuiteKind::Pairs => "pairs",
            SuiteKind::Delta => "delta",
        }
    }
}

fn crate_version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

/// Run one suite.
pub fn run_suite(kind: SuiteKind, fault: FaultInjection) -> Result<VerificationReport, Error> {
    let (checks, exploratory) = match kind {
        SuiteKind::Bounds => suites::bounds::run(fault)?,
        SuiteKind::Ode => suites::ode::run()?,
        SuiteKind::Recursion => suites::recursion::run()?,
        SuiteKind::Convexity => suites::convexity::run()?,
        SuiteKind::Ratio => suites::ratio::run()?,
        SuiteKind::Fourier => suites::fourier::run()?,
        SuiteKind::Avg => suites::avg::run()?,
        SuiteKind::Pairs => suites::pairs::run()?,
        SuiteKind::Delta => suites::delta::run()?,
    };
    Ok(VerificationReport {
        suite: kind.name().to_string(),
        checks,
        exploratory,
        version: crate_version(),
    })
}

/// Run every suite and merge into one report (suite name `all`).
pub fn run_all(fault: FaultInjection) -> Result<VerificationReport, Error> {
    let mut checks = Vec::new();
    let mut exploratory = Vec::new();
    for kind in SuiteKind::ALL {
        let report = run_suite(kind, fault)?;
        checks.extend(report.checks);
        exploratory.extend(report.exploratory);
    }
    Ok(VerificationReport {
        suite: "all".to_string(),
        checks,
        exploratory,
        version: crate_version(),
    })
}
