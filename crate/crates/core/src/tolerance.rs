use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numerical thresholds shared by every comparison in the crate.
///
/// `eq_tol` governs point equality and the double-root decision of the
/// quadratic solver, `suite_tol` is the pass threshold for identity checks
/// and `hull_tol` bounds the sampled support-function gap.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub eq_tol: f64,
    pub suite_tol: f64,
    pub hull_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eq_tol: 1e-9,
            suite_tol: 1e-9,
            hull_tol: 5e-2,
        }
    }
}

impl Tolerance {
    pub fn new(eq_tol: f64, suite_tol: f64, hull_tol: f64) -> Result<Self> {
        for (name, value) in [
            ("eq_tol", eq_tol),
            ("suite_tol", suite_tol),
            ("hull_tol", hull_tol),
        ] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::InvalidTolerance { name, value });
            }
        }
        Ok(Self {
            eq_tol,
            suite_tol,
            hull_tol,
        })
    }

    /// Same thresholds with a different suite tolerance.
    pub fn with_suite_tol(self, suite_tol: f64) -> Result<Self> {
        Self::new(self.eq_tol, suite_tol, self.hull_tol)
    }

    /// Threshold for checks that hold to a few ulps (norm identity, invariances
    /// of polynomial maps): three orders of magnitude below `suite_tol`.
    pub fn strict(&self) -> f64 {
        self.suite_tol * 1e-3
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let tol = Tolerance::default();
        assert_eq!(tol.eq_tol, 1e-9);
        assert_eq!(tol.suite_tol, 1e-9);
        assert_eq!(tol.hull_tol, 5e-2);
        assert!((tol.strict() - 1e-12).abs() < 1e-24);
    }

    #[test]
    fn rejects_non_positive() {
        assert!(Tolerance::new(0.0, 1e-9, 0.05).is_err());
        assert!(Tolerance::new(1e-9, -1.0, 0.05).is_err());
        assert!(Tolerance::new(1e-9, 1e-9, f64::NAN).is_err());
        assert!(Tolerance::default().with_suite_tol(1e-30).is_ok());
    }
}
