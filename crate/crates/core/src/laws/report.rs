use std::time::Instant;

use serde::Serialize;

use crate::grassmann::Expression;
use crate::spinor::{Violation, ViolationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Residual,
}

/// Outcome of one named check. `residual` is the exact difference in
/// normal form (labelled per entry for multi-component checks), or the
/// list of violated identity instances.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check_name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
    /// Number of identity instances evaluated, for exhaustive checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluated: Option<usize>,
    pub millis: u128,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Match
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    /// Process exit status: 0 when every check matches, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check_name == name)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.check_name.cmp(&b.check_name));
    }

    /// Records `lhs − rhs` entry by entry; the check matches iff every
    /// difference is zero.
    pub fn push_entries(&mut self, name: impl Into<String>, started: Instant, entries: &[(String, Expression, Expression)]) {
        let mut parts = Vec::new();
        for (label, lhs, rhs) in entries {
            let diff = lhs - rhs;
            if !diff.is_zero() {
                parts.push(if label.is_empty() { diff.to_string() } else { format!("{label}: {diff}") });
            }
        }
        let status = if parts.is_empty() { Status::Match } else { Status::Residual };
        self.checks.push(CheckResult {
            check_name: name.into(),
            status,
            residual: (!parts.is_empty()).then(|| parts.join("; ")),
            violations: Vec::new(),
            evaluated: Some(entries.len()),
            millis: started.elapsed().as_millis(),
        });
    }

    pub fn push_eq(&mut self, name: impl Into<String>, started: Instant, lhs: &Expression, rhs: &Expression) {
        self.push_entries(name, started, &[(String::new(), lhs.clone(), rhs.clone())]);
    }

    pub fn push_zero(&mut self, name: impl Into<String>, started: Instant, e: &Expression) {
        self.push_eq(name, started, e, &Expression::zero());
    }

    /// One check per identity name in an exhaustive identity report.
    pub fn push_identities(&mut self, prefix: &str, started: Instant, report: &ViolationReport) {
        let millis = started.elapsed().as_millis();
        for (name, &count) in &report.evaluated {
            let violations: Vec<Violation> =
                report.violations.iter().filter(|v| &v.identity_name == name).cloned().collect();
            self.checks.push(CheckResult {
                check_name: format!("{prefix}/{name}"),
                status: if violations.is_empty() { Status::Match } else { Status::Residual },
                residual: None,
                violations,
                evaluated: Some(count),
                millis,
            });
        }
    }

    /// A boolean fact with a description of the failure.
    pub fn push_fact(&mut self, name: impl Into<String>, started: Instant, ok: bool, failure: impl FnOnce() -> String) {
        self.checks.push(CheckResult {
            check_name: name.into(),
            status: if ok { Status::Match } else { Status::Residual },
            residual: (!ok).then(failure),
            violations: Vec::new(),
            evaluated: None,
            millis: started.elapsed().as_millis(),
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_sets_exit_code() {
        let mut r = VerificationReport::default();
        r.push_zero("zero", Instant::now(), &Expression::zero());
        assert_eq!(r.exit_code(), 0);
        r.push_zero("nonzero", Instant::now(), &Expression::one());
        assert_eq!(r.exit_code(), 1);
        let bad = r.get("nonzero").unwrap();
        assert_eq!(bad.status, Status::Residual);
        assert_eq!(bad.residual.as_deref(), Some("(1+0*i)"));
    }

    #[test]
    fn json_shape() {
        let mut r = VerificationReport::default();
        r.push_eq("a", Instant::now(), &Expression::one(), &Expression::zero());
        let v = serde_json::to_value(&r).unwrap();
        let c = &v["checks"][0];
        assert_eq!(c["check_name"], "a");
        assert_eq!(c["status"], "residual");
        assert!(c["millis"].is_u64());
        assert!(c.get("violations").is_none());
    }
}
