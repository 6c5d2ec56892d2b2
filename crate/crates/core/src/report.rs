//! Pass/fail records produced by the verification suites.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
            elapsed_ms: 0,
        }
    }

    pub fn skipped(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Skipped, detail: detail.into(), elapsed_ms: 0 }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    fn to_json(&self, timings: bool) -> Value {
        let mut v = json!({
            "check_name": self.name,
            "status": self.status,
            "detail": self.detail,
        });
        if timings {
            v["elapsed_ms"] = json!(self.elapsed_ms as u64);
        }
        v
    }
}

/// Ordered list of checks belonging to one suite.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    /// Run `f`, record its outcome and wall time. An `Err` becomes a failing check.
    pub fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> crate::Result<(bool, String)>) {
        let start = Instant::now();
        let name = name.into();
        let mut c = match f() {
            Ok((ok, detail)) => Check::new(name, ok, detail),
            Err(e) => Check::new(name, false, format!("error: {e}")),
        };
        c.elapsed_ms = start.elapsed().as_millis();
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    /// JSON form. Wall times are only included on request since they are not
    /// reproducible between runs.
    pub fn to_json(&self, timings: bool) -> Value {
        json!({
            "suite": self.suite,
            "checks": self.checks.iter().map(|c| c.to_json(timings)).collect::<Vec<_>>(),
            "summary": {
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "skipped": self.count(Status::Skipped),
            },
        })
    }
}
