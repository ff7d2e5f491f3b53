//! Check results and the aggregated report.

use serde::{Deserialize, Serialize};

/// One quantitative comparison.
///
/// `passed` holds iff `rel_dev ≤ tolerance`, or `abs_dev ≤ tolerance` when
/// the reference is zero. A non-finite computed value never passes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    #[serde(with = "finite_or_null")]
    pub computed: f64,
    #[serde(with = "finite_or_null")]
    pub reference: f64,
    #[serde(with = "finite_or_null")]
    pub abs_dev: f64,
    #[serde(with = "finite_or_null")]
    pub rel_dev: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, computed: f64, reference: f64, tolerance: f64) -> Self {
        let abs_dev = (computed - reference).abs();
        let rel_dev = if reference == 0.0 {
            abs_dev
        } else {
            abs_dev / reference.abs()
        };
        // NaN comparisons are false, so non-finite results fail here.
        let passed = rel_dev <= tolerance;
        CheckResult {
            name: name.into(),
            computed,
            reference,
            abs_dev,
            rel_dev,
            tolerance,
            passed,
        }
    }

    /// A check whose computation itself failed.
    pub fn errored(name: impl Into<String>, reference: f64, tolerance: f64) -> Self {
        CheckResult::new(name, f64::NAN, reference, tolerance)
    }
}

/// Run parameters echoed into the report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub alpha: f64,
    pub n_max: u32,
    pub k_max: u32,
    pub quad_order: usize,
    pub panels: usize,
    pub grid_points: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub parameters: Parameters,
    pub checks: Vec<CheckResult>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn new(parameters: Parameters, checks: Vec<CheckResult>) -> Self {
        let overall = checks.iter().all(|c| c.passed);
        VerificationReport {
            parameters,
            checks,
            overall,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// JSON has no NaN/∞; those serialize as `null` and read back as NaN.
mod finite_or_null {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &f64, s: S) -> Result<S::Ok, S::Error> {
        if value.is_finite() {
            s.serialize_f64(*value)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_rule() {
        assert!(CheckResult::new("a", 1.0 + 1e-12, 1.0, 1e-10).passed);
        assert!(!CheckResult::new("a", 1.1, 1.0, 1e-10).passed);
        let zero_ref = CheckResult::new("z", 1e-12, 0.0, 1e-10);
        assert!(zero_ref.passed);
        assert_eq!(zero_ref.rel_dev, zero_ref.abs_dev);
        assert!(!CheckResult::errored("e", 1.0, 1.0).passed);
        assert!(CheckResult::new("exact", 0.0, 0.0, 0.0).passed);
    }

    #[test]
    fn overall_requires_every_check() {
        let p = Parameters { alpha: 1.0, n_max: 0, k_max: 2, quad_order: 2, panels: 1, grid_points: 100 };
        let ok = VerificationReport::new(p.clone(), vec![CheckResult::new("a", 1.0, 1.0, 0.0)]);
        assert!(ok.overall);
        let bad = VerificationReport::new(
            p,
            vec![CheckResult::new("a", 1.0, 1.0, 0.0), CheckResult::new("b", 2.0, 1.0, 0.1)],
        );
        assert!(!bad.overall);
        assert_eq!(bad.failures().map(|c| c.name.as_str()).collect::<Vec<_>>(), ["b"]);
    }
}
