//! Verification reports and the per-check accumulator behind them.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::tolerance::Tolerance;

/// Failures kept per check; the total count is always exact.
pub const MAX_FAILURES_PER_CHECK: usize = 8;

/// Which threshold a check is held to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// `Tolerance::suite_tol`.
    Suite,
    /// `Tolerance::strict()`, for identities that hold to a few ulps.
    Strict,
    /// `Tolerance::hull_tol`.
    Hull,
}

impl Bound {
    pub fn resolve(&self, tol: &Tolerance) -> f64 {
        match self {
            Bound::Suite => tol.suite_tol,
            Bound::Strict => tol.strict(),
            Bound::Hull => tol.hull_tol,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckDef {
    pub name: String,
    pub bound: Bound,
}

impl CheckDef {
    pub fn new(name: impl Into<String>, bound: Bound) -> Self {
        Self {
            name: name.into(),
            bound,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub check: String,
    pub index: u64,
    pub input: String,
    pub observed: String,
    pub expected: String,
    pub error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub evaluations: u64,
    pub max_error: f64,
    pub tolerance: f64,
    pub failures: u64,
    pub pass: bool,
}

/// Outcome of one suite run.
///
/// `max_error` and `tolerance` cover the checks held to the suite tolerance;
/// checks with their own thresholds appear in `checks`. `pass` holds exactly
/// when `max_error <= tolerance` and `failures` is empty.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub samples: u64,
    pub seed: u64,
    pub max_error: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub failures: Vec<Failure>,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, Default)]
struct Entry {
    evaluations: u64,
    max_error: f64,
    failures: u64,
    kept: Vec<Failure>,
}

/// Per-check running maxima. Merging is associative and commutative, so
/// tallies from any partition of the sample range combine to the same result.
#[derive(Clone, Debug)]
pub struct Tally {
    defs: Arc<Vec<CheckDef>>,
    tolerances: Arc<Vec<f64>>,
    entries: Vec<Entry>,
}

impl Tally {
    pub fn new(defs: Arc<Vec<CheckDef>>, tol: &Tolerance) -> Self {
        let tolerances = Arc::new(defs.iter().map(|d| d.bound.resolve(tol)).collect());
        let entries = vec![Entry::default(); defs.len()];
        Self {
            defs,
            tolerances,
            entries,
        }
    }

    pub fn tolerance(&self, check: usize) -> f64 {
        self.tolerances[check]
    }

    /// Records one evaluation of `check`. `detail` yields
    /// `(input, observed, expected)` and is only called on failure.
    pub fn record(
        &mut self,
        check: usize,
        index: u64,
        error: f64,
        detail: impl FnOnce() -> (String, String, String),
    ) {
        // NaN counts as a failure with the largest finite error
        let error = if error.is_nan() { f64::MAX } else { error.min(f64::MAX) };
        let tol = self.tolerances[check];
        let e = &mut self.entries[check];
        e.evaluations += 1;
        e.max_error = e.max_error.max(error);
        if error > tol {
            e.failures += 1;
            if e.kept.len() < MAX_FAILURES_PER_CHECK {
                let (input, observed, expected) = detail();
                e.kept.push(Failure {
                    check: self.defs[check].name.clone(),
                    index,
                    input,
                    observed,
                    expected,
                    error,
                });
            }
        }
    }

    /// Records a pass/fail condition as error 0 or 1.
    pub fn record_bool(&mut self, check: usize, index: u64, ok: bool, detail: impl FnOnce() -> String) {
        self.record(check, index, if ok { 0.0 } else { 1.0 }, || {
            (detail(), "false".into(), "true".into())
        });
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.entries.iter_mut().zip(other.entries) {
            a.evaluations += b.evaluations;
            a.max_error = a.max_error.max(b.max_error);
            a.failures += b.failures;
            a.kept.extend(b.kept);
            a.kept.sort_by_key(|f| f.index);
            a.kept.truncate(MAX_FAILURES_PER_CHECK);
        }
        self
    }

    pub fn into_report(self, suite: &str, samples: u64, seed: u64, tol: &Tolerance) -> Report {
        let mut max_error: f64 = 0.0;
        let mut failures = Vec::new();
        let mut checks = Vec::with_capacity(self.entries.len());
        for ((def, entry), tolerance) in self.defs.iter().zip(self.entries).zip(self.tolerances.iter()) {
            if def.bound == Bound::Suite {
                max_error = max_error.max(entry.max_error);
            }
            checks.push(CheckResult {
                name: def.name.clone(),
                evaluations: entry.evaluations,
                max_error: entry.max_error,
                tolerance: *tolerance,
                failures: entry.failures,
                pass: entry.failures == 0,
            });
            failures.extend(entry.kept);
        }
        let pass = max_error <= tol.suite_tol && failures.is_empty();
        Report {
            suite: suite.to_string(),
            samples,
            seed,
            max_error,
            tolerance: tol.suite_tol,
            pass,
            failures,
            checks,
        }
    }
}
