use serde::Serialize;

/// Outcome of one exhaustive check: how many cases ran and which failed.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub total: usize,
    pub failed: usize,
    /// First few failing cases, for diagnostics.
    pub failures: Vec<String>,
}

const KEEP: usize = 8;

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), total: 0, failed: 0, failures: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEEP {
                self.failures.push(case());
            }
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.total += other.total;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < KEEP {
                self.failures.push(f);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.total > 0
    }
}
