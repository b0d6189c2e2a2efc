//! Case-level pass/fail reports shared by every verification suite.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Case {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Pass,
            detail: detail.into(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Fail,
            detail: detail.into(),
        }
    }

    /// Pass when `ok`, otherwise fail; `detail` is evaluated either way.
    pub fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(name, detail)
        } else {
            Self::fail(name, detail)
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// `{ "suite", "params", "cases": [{name, status, detail}], "failures" }`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub params: serde_json::Value,
    pub cases: Vec<Case>,
    pub failures: usize,
}

impl Report {
    pub fn new(suite: impl Into<String>, params: serde_json::Value) -> Self {
        Self {
            suite: suite.into(),
            params,
            cases: Vec::new(),
            failures: 0,
        }
    }

    pub fn push(&mut self, case: Case) {
        if !case.passed() {
            self.failures += 1;
        }
        self.cases.push(case);
    }

    pub fn extend(&mut self, cases: impl IntoIterator<Item = Case>) {
        for c in cases {
            self.push(c);
        }
    }

    /// Appends another report's cases, prefixing their names with its suite.
    pub fn absorb(&mut self, other: Report) {
        let prefix = other.suite;
        self.extend(other.cases.into_iter().map(|mut c| {
            c.name = format!("{prefix}/{}", c.name);
            c
        }));
    }

    pub fn all_passed(&self) -> bool {
        self.failures == 0
    }

    pub fn failed_cases(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_count_tracks_cases() {
        let mut r = Report::new("demo", serde_json::json!({"n": 2}));
        r.push(Case::pass("a", ""));
        r.push(Case::fail("b", "boom"));
        assert_eq!(r.failures, 1);
        assert!(!r.all_passed());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["cases"][1]["status"], "fail");
        assert_eq!(v["failures"], 1);
    }
}
