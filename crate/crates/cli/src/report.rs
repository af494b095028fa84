use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Finding,
    NotApplicable,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Finding => "finding",
            Status::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub id: String,
    /// What the claim asserts, in words.
    pub paper_ref: String,
    pub status: Status,
    pub data: Value,
    pub millis: Option<u64>,
    #[serde(skip)]
    pub summary: String,
}

impl Claim {
    pub fn new(id: impl Into<String>, statement: &str, status: Status, summary: impl Into<String>, data: Value) -> Claim {
        Claim {
            id: id.into(),
            paper_ref: statement.to_string(),
            status,
            data,
            millis: None,
            summary: summary.into(),
        }
    }

    /// A claim whose computation was refused.
    pub fn refused(id: impl Into<String>, statement: &str, reason: impl std::fmt::Display) -> Claim {
        let reason = reason.to_string();
        Claim::new(
            id,
            statement,
            Status::NotApplicable,
            reason.clone(),
            serde_json::json!({ "reason": reason }),
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: String,
    pub config: Value,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.claims.iter().any(|c| c.status == Status::Fail)
    }

    /// Pretty JSON with keys sorted at every level.
    pub fn to_json(&self) -> String {
        // Value's map is ordered, so a round trip sorts every key
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.claims {
            let _ = write!(s, "{:<14} {}", c.status.as_str(), c.id);
            if !c.summary.is_empty() {
                let _ = write!(s, "  {}", c.summary);
            }
            if let Some(ms) = c.millis {
                let _ = write!(s, "  ({ms} ms)");
            }
            s.push('\n');
        }
        let count = |st: Status| self.claims.iter().filter(|c| c.status == st).count();
        let _ = writeln!(
            s,
            "{} pass, {} fail, {} finding, {} not-applicable",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Finding),
            count(Status::NotApplicable)
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keys_are_sorted() {
        let r = Report {
            version: "0".into(),
            config: serde_json::json!({ "z": 1, "a": 2 }),
            claims: vec![Claim::new("x", "y", Status::Pass, "", serde_json::json!({ "b": 1, "a": 0 }))],
        };
        let s = r.to_json();
        assert!(s.find("\"claims\"").unwrap() < s.find("\"config\"").unwrap());
        assert!(s.find("\"a\": 2").unwrap() < s.find("\"z\"").unwrap());
        assert!(s.contains("\"millis\": null"));
        assert!(s.contains("\"status\": \"pass\""));
        assert!(!r.failed());
    }
}
