//! Verification reports.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Status {
    Pass,
    Fail,
    ConjectureConfirmed,
    ConjectureViolated,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn conjecture(ok: bool) -> Status {
        if ok {
            Status::ConjectureConfirmed
        } else {
            Status::ConjectureViolated
        }
    }

    /// Conjecture outcomes never count as failures.
    pub fn is_failure(self) -> bool {
        self == Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ConjectureConfirmed => "CONJECTURE-CONFIRMED",
            Status::ConjectureViolated => "CONJECTURE-VIOLATED",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CheckRecord {
    pub relation: String,
    pub case: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(
        &mut self,
        relation: impl Into<String>,
        case: impl Into<String>,
        status: Status,
        witness: Option<String>,
    ) {
        self.records.push(CheckRecord { relation: relation.into(), case: case.into(), status, witness });
    }

    pub fn check(&mut self, relation: impl Into<String>, case: impl Into<String>, ok: bool) {
        self.push(relation, case, Status::from_bool(ok), None);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn passed(&self) -> bool {
        !self.records.iter().any(|r| r.status.is_failure())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status.is_failure())
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Stable order: by relation, then case.
    pub fn sorted(mut self) -> Self {
        self.records.sort_by(|a, b| (&a.relation, &a.case).cmp(&(&b.relation, &b.case)));
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjecture_outcomes_do_not_fail() {
        let mut r = Report::new();
        r.push("q3", "n=1", Status::ConjectureViolated, None);
        assert!(r.passed());
        r.check("ybe", "case", false);
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn json_shape() {
        let mut r = Report::new();
        r.push("okada", "k=2", Status::ConjectureConfirmed, Some("a=1".into()));
        let s = serde_json::to_string(&r.records[0]).unwrap();
        assert_eq!(s, r#"{"relation":"okada","case":"k=2","status":"CONJECTURE-CONFIRMED","witness":"a=1"}"#);
    }
}
