//! Outcome of an exhaustive verification run.

use std::fmt;

/// Counts checks and keeps a bounded list of counterexamples.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
    pub failure_count: usize,
}

const KEPT_FAILURES: usize = 20;

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), ..Default::default() }
    }

    /// Records one check; the message is only built on failure.
    pub fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(message());
            }
        }
    }

    pub fn is_ok(&self) -> bool {
        self.failure_count == 0
    }

    /// Folds another report into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(format!("{}: {}", other.name, f));
            }
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.is_ok() { "ok" } else { "FAILED" };
        write!(f, "{}: {} ({} checks, {} failures)", self.name, status, self.checks, self.failure_count)?;
        for line in &self.failures {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}
