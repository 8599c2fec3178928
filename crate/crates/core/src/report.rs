use serde::{Deserialize, Serialize};

use crate::wick::OperatorPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked identity. `residual` is the printed residual polynomial for
/// symbolic checks and the maximum absolute deviation for numerical ones.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub identity: String,
    pub status: Status,
    pub residual: String,
}

/// Ordered pass/fail record; serializes as a bare JSON array of entries.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VerificationReport {
    pub entries: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a symbolic identity whose residual must be the zero polynomial.
    pub fn push_symbolic(&mut self, identity: impl Into<String>, residual: &OperatorPoly) {
        self.entries.push(CheckEntry {
            identity: identity.into(),
            status: if residual.is_zero() { Status::Pass } else { Status::Fail },
            residual: residual.to_string(),
        });
    }

    /// Records a numerical check: passes iff `max_residual <= tolerance` (NaN fails).
    pub fn push_numeric(&mut self, identity: impl Into<String>, max_residual: f64, tolerance: f64) {
        self.entries.push(CheckEntry {
            identity: identity.into(),
            status: if max_residual <= tolerance { Status::Pass } else { Status::Fail },
            residual: format!("{max_residual:.3e}"),
        });
    }

    pub fn push_flag(&mut self, identity: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.entries.push(CheckEntry {
            identity: identity.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual: detail.into(),
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn find(&self, identity: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.identity == identity)
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_schema_is_flat_array() {
        let mut report = VerificationReport::new();
        report.push_symbolic("[I, I] = 0", &OperatorPoly::zero());
        report.push_numeric("spectrum", 2.0e-3, 1e-9);
        let value: serde_json::Value = serde_json::from_str(&report.to_json().unwrap()).unwrap();
        let arr = value.as_array().unwrap();
        assert_eq!(arr.len(), 2);
        assert_eq!(arr[0]["status"], "pass");
        assert_eq!(arr[0]["residual"], "0");
        assert_eq!(arr[1]["status"], "fail");
        assert_eq!(arr[1].as_object().unwrap().len(), 3);
    }

    #[test]
    fn nan_residual_fails() {
        let mut report = VerificationReport::new();
        report.push_numeric("nan", f64::NAN, 1.0);
        assert!(!report.all_passed());
    }
}
