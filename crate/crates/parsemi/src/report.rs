//! Check verdicts and machine-readable reports.
//!
//! Every verification operation in the crate reports through these types so
//! that the CLI can render one uniform format. Rendering is deterministic:
//! identical inputs produce byte-identical text and JSON.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

/// One named check with an optional witness for failures.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), verdict: Verdict::Pass, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check { name: name.into(), verdict: Verdict::Fail, witness: Some(witness.into()) }
    }
}

/// Outcome of a batch of axiom checks, with one entry per axiom.
///
/// Verifiers report all failures, not just the first, so a hand-built
/// instance gets a complete diagnosis in one run.
#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn record(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.checks.push(Check::pass(name));
        } else {
            self.checks.push(Check::fail(name, witness()));
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == Verdict::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    CapExceeded,
}

/// The uniform command report: echoed command, per-check verdicts,
/// a dimension table and an overall status.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub dims: BTreeMap<String, usize>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            status: Status::Pass,
            checks: Vec::new(),
            dims: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        if check.verdict == Verdict::Fail && self.status == Status::Pass {
            self.status = Status::Fail;
        }
        self.checks.push(check);
    }

    pub fn extend(&mut self, report: AxiomReport) {
        for check in report.checks {
            self.push(check);
        }
    }

    pub fn dim(&mut self, name: impl Into<String>, value: usize) {
        self.dims.insert(name.into(), value);
    }

    pub fn cap_exceeded(&mut self) {
        self.status = Status::CapExceeded;
    }

    /// Marks the whole report failed (used for errors that precede checks).
    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(Check::fail(name, witness));
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail | Status::CapExceeded => 1,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for c in &self.checks {
            let verdict = match c.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
            };
            match &c.witness {
                Some(w) => out.push_str(&format!("check {}: {} ({})\n", c.name, verdict, w)),
                None => out.push_str(&format!("check {}: {}\n", c.name, verdict)),
            }
        }
        for (k, v) in &self.dims {
            out.push_str(&format!("dim {} = {}\n", k, v));
        }
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::CapExceeded => "cap_exceeded",
        };
        out.push_str(&format!("status: {}\n", status));
        out
    }

    pub fn render_json(&self) -> String {
        // BTreeMap and fixed field order keep this byte-stable.
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_checks() {
        let mut r = Report::new("demo");
        r.push(Check::pass("a"));
        assert_eq!(r.status, Status::Pass);
        r.push(Check::fail("b", "witness (0,1)"));
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn rendering_is_deterministic() {
        let mut r = Report::new("demo");
        r.dim("z", 1);
        r.dim("a", 2);
        r.push(Check::pass("axiom"));
        assert_eq!(r.render_text(), r.render_text());
        assert_eq!(r.render_json(), r.render_json());
        // dims render in sorted key order
        let text = r.render_text();
        let a = text.find("dim a").unwrap();
        let z = text.find("dim z").unwrap();
        assert!(a < z);
    }
}
