//! Verification reports shared by every suite.
//!
//! A report is an ordered list of checks. Failure is data: a failing check
//! carries a witness payload and never aborts the suite.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::exact::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

/// One checked identity or computed quantity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub check: String,
    pub params: Map<String, Value>,
    pub status: Status,
    pub values: Map<String, Value>,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl CheckEntry {
    pub fn new(check: impl Into<String>, provenance: impl Into<String>) -> Self {
        CheckEntry {
            check: check.into(),
            params: Map::new(),
            status: Status::Pass,
            values: Map::new(),
            provenance: provenance.into(),
            witness: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn value(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.values.insert(key.to_string(), value.into());
        self
    }

    pub fn status(mut self, ok: bool) -> Self {
        self.status = Status::from_bool(ok);
        self
    }

    /// Marks the entry failed and attaches a witness.
    pub fn fail_with(mut self, witness: Value) -> Self {
        self.status = Status::Fail;
        self.witness = Some(witness);
        self
    }

    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub entries: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport { suite: suite.into(), entries: Vec::new() }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    pub fn summary(&self) -> Summary {
        let pass = self.entries.iter().filter(|e| e.passed()).count();
        Summary { pass, fail: self.entries.len() - pass }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(CheckEntry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn find(&self, check: &str) -> impl Iterator<Item = &CheckEntry> {
        let check = check.to_string();
        self.entries.iter().filter(move |e| e.check == check)
    }

    /// `{"suite": …, "entries": […], "summary": {"pass": n, "fail": n}}`.
    pub fn to_json(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("suite".into(), Value::String(self.suite.clone()));
        doc.insert("entries".into(), serde_json::to_value(&self.entries).expect("entries serialize"));
        doc.insert("summary".into(), serde_json::to_value(self.summary()).expect("summary serializes"));
        Value::Object(doc)
    }
}

/// Witness payload for a nonzero residual matrix.
pub fn residual_witness(residual: &Matrix) -> Value {
    let first = residual.first_nonzero().map(|((i, j), v)| {
        serde_json::json!({ "row": i, "col": j, "value": v })
    });
    serde_json::json!({
        "shape": [residual.rows(), residual.cols()],
        "nonzero_entries": residual.nnz(),
        "first_nonzero": first,
        "residual": residual,
    })
}

/// Checks that `residual` vanishes and records a witness otherwise.
pub fn zero_check(entry: CheckEntry, residual: &Matrix) -> CheckEntry {
    if residual.is_zero() {
        entry.status(true)
    } else {
        entry.fail_with(residual_witness(residual))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Scalar;

    #[test]
    fn summary_counts() {
        let mut r = VerificationReport::new("t");
        r.push(CheckEntry::new("a", "p"));
        r.push(zero_check(CheckEntry::new("b", "p"), &Matrix::identity(1)));
        assert_eq!(r.summary(), Summary { pass: 1, fail: 1 });
        assert!(!r.passed());
        let fail = r.failures().next().unwrap();
        assert_eq!(fail.witness.as_ref().unwrap()["nonzero_entries"], 1);
    }

    #[test]
    fn json_field_order_is_stable() {
        let mut r = VerificationReport::new("t");
        r.push(CheckEntry::new("a", "p").param("m", 1).value("x", Scalar::int(2).to_string()));
        let text = serde_json::to_string(&r.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"suite":"t","entries":[{"check":"a","params":{"m":1},"status":"pass","values":{"x":"2"},"provenance":"p"}],"summary":{"pass":1,"fail":0}}"#
        );
    }
}
