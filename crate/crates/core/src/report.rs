//! Serializable verification reports.

use serde::{Deserialize, Serialize};

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// The outcome of one verification suite for one choice of q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub qspec: String,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, qspec: impl Into<String>) -> Self {
        SuiteReport {
            suite: suite.into(),
            qspec: qspec.into(),
            pass: true,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, label: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.pass &= pass;
        self.checks.push(Check {
            label: label.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// A full `verify` run: several suites against one q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub version: u32,
    pub qspec: String,
    pub pass: bool,
    pub suites: Vec<SuiteReport>,
}

pub const REPORT_VERSION: u32 = 1;

impl VerifyReport {
    pub fn new(qspec: impl Into<String>) -> Self {
        VerifyReport {
            version: REPORT_VERSION,
            qspec: qspec.into(),
            pass: true,
            suites: Vec::new(),
        }
    }

    pub fn push(&mut self, suite: SuiteReport) {
        self.pass &= suite.pass;
        self.suites.push(suite);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = VerifyReport::new("zeta:3");
        let mut s = SuiteReport::new("dims", "zeta:3");
        s.push("HH_4", true, "3 = 3");
        s.push("HH_5", false, "4 != 5");
        r.push(s);
        let text = serde_json::to_string(&r).unwrap();
        let back: VerifyReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(!back.pass);
    }
}
