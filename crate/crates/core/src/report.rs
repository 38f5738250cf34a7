//! Verification records and the report emitted by the verifier.

use serde::{Deserialize, Serialize};

use crate::complex::Complex;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub name: String,
    pub computed: Complex,
    pub expected: Complex,
    pub abs_err: f64,
    pub tol: f64,
    pub pass: bool,
}

impl VerificationRecord {
    pub fn new(name: impl Into<String>, computed: Complex, expected: Complex, tol: f64) -> Self {
        let abs_err = (computed - expected).norm();
        Self { name: name.into(), computed, expected, abs_err, tol, pass: abs_err <= tol }
    }

    /// A record for a check whose outcome is a yes/no answer. Encodes as
    /// `computed = 1` when the check holds and `expected = 1`.
    pub fn boolean(name: impl Into<String>, holds: bool) -> Self {
        let one = Complex::new(1.0, 0.0);
        Self::new(name, if holds { one } else { Complex::new(0.0, 0.0) }, one, 0.0)
    }

    /// Re-evaluates `pass` against a different tolerance.
    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self.pass = self.abs_err <= tol;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts records by name so reports are stable across runs.
    pub fn new(mut records: Vec<VerificationRecord>, wall_time_ms: u64) -> Self {
        records.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = records.iter().filter(|r| r.pass).count();
        Self { summary: Summary { total: records.len(), passed, wall_time_ms }, records }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    /// Plain-text table, one record per line.
    pub fn to_table(&self) -> String {
        let width = self.records.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
        let mut out = format!("{:<width$}  {:>10}  {:>10}  {}\n", "name", "abs_err", "tol", "result");
        for r in &self.records {
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{:<width$}  {:>10.3e}  {:>10.3e}  {verdict}\n", r.name, r.abs_err, r.tol));
        }
        out.push_str(&format!(
            "{} of {} passed in {} ms\n",
            self.summary.passed, self.summary.total, self.summary.wall_time_ms
        ));
        out
    }
}

/// `re,im` with negative zero printed as zero.
pub fn fmt_complex(z: Complex) -> String {
    let clean = |x: f64| if x == 0.0 { 0.0 } else { x };
    format!("{},{}", clean(z.re), clean(z.im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_and_report() {
        let a = VerificationRecord::new("b", Complex::new(1.0, 0.0), Complex::new(1.0, 1e-9), 1e-8);
        assert!(a.pass);
        assert!((a.abs_err - 1e-9).abs() < 1e-20);
        let b = VerificationRecord::new("a", Complex::new(1.0, 0.0), Complex::new(2.0, 0.0), 1e-8);
        assert!(!b.pass);
        let report = VerificationReport::new(vec![a, b], 3);
        assert_eq!(report.records[0].name, "a");
        assert_eq!(report.summary, Summary { total: 2, passed: 1, wall_time_ms: 3 });
        assert!(!report.all_passed());
        assert_eq!(report.failures().count(), 1);
        assert!(report.to_table().contains("1 of 2 passed"));
    }

    #[test]
    fn json_shape() {
        let r = VerificationRecord::new("x", Complex::new(0.5, -1.0), Complex::new(0.5, -1.0), 1e-12);
        let report = VerificationReport::new(vec![r], 0);
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["records"][0]["computed"], serde_json::json!([0.5, -1.0]));
        assert_eq!(v["records"][0]["pass"], true);
        assert_eq!(v["summary"]["total"], 1);
        let back: VerificationReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn boolean_records_and_tolerance_override() {
        assert!(VerificationRecord::boolean("ok", true).pass);
        assert!(!VerificationRecord::boolean("no", false).pass);
        let r = VerificationRecord::new("t", Complex::new(1.0, 0.0), Complex::new(1.1, 0.0), 1e-3);
        assert!(!r.pass);
        assert!(r.with_tol(0.2).pass);
    }

    #[test]
    fn negative_zero_is_printed_as_zero() {
        assert_eq!(fmt_complex(Complex::new(-0.0, -1.5)), "0,-1.5");
        assert_eq!(fmt_complex(Complex::new(0.0, -1.7320508075688772)), "0,-1.7320508075688772");
    }
}
