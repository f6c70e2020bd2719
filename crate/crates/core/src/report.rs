//! Deterministic pass/fail reports produced by the verification suites.

use std::fmt;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First counterexample, canonical text.
    pub detail: Option<String>,
}

/// Outcome of one verification suite. Failures are data, not errors: the
/// report records every check with the first counterexample found.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn record(
        &mut self,
        name: impl Into<String>,
        passed: bool,
        detail: impl FnOnce() -> String,
    ) {
        let name = name.into();
        self.checks.push(Check {
            detail: if passed { None } else { Some(detail()) },
            name,
            passed,
        });
    }

    pub fn record_ok(&mut self, name: impl Into<String>) {
        self.record(name, true, String::new);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn merge(&mut self, other: CheckReport) {
        for mut check in other.checks {
            check.name = format!("{}: {}", other.suite, check.name);
            self.checks.push(check);
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {}",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {}",
                if c.passed { "pass" } else { "FAIL" },
                c.name
            )?;
            if let Some(d) = &c.detail {
                writeln!(f, "        counterexample: {d}")?;
            }
        }
        Ok(())
    }
}
