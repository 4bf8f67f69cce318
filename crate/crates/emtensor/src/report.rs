//! Pass/fail records produced by every checker.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Number of elements (or candidates) examined.
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, checked: u64) -> Check {
        Check { name: name.into(), pass: true, checked, witness: None }
    }

    pub fn fail(name: impl Into<String>, checked: u64, witness: impl Into<String>) -> Check {
        Check { name: name.into(), pass: false, checked, witness: Some(witness.into()) }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Runs `f` over `0..n` and records the first index where it returns a witness.
    pub fn elementwise(&mut self, name: impl Into<String>, n: u64, mut f: impl FnMut(u64) -> Option<String>) {
        let name = name.into();
        for i in 0..n {
            if let Some(w) = f(i) {
                self.push(Check::fail(name, i + 1, w));
                return;
            }
        }
        self.push(Check::pass(name, n));
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    /// Prefixes every check name, for nesting reports.
    pub fn scoped(mut self, prefix: &str) -> Report {
        for c in &mut self.checks {
            c.name = format!("{prefix}: {}", c.name);
        }
        self
    }
}
