use std::fmt;

/// How many violation messages a report keeps verbatim.
const KEPT_VIOLATIONS: usize = 64;

/// Outcome of an exhaustive check: how many instances were examined and which
/// of them failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checked: usize,
    pub violation_count: usize,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    /// Records one checked instance, failing with the lazily built message.
    pub fn check(&mut self, ok: bool, message: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok {
            self.violate(message());
        }
        ok
    }

    pub fn violate(&mut self, message: impl Into<String>) {
        self.violation_count += 1;
        if self.violations.len() < KEPT_VIOLATIONS {
            self.violations.push(message.into());
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Folds `other` into this report, prefixing its messages with its title.
    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.violation_count += other.violation_count;
        for v in other.violations {
            if self.violations.len() < KEPT_VIOLATIONS {
                self.violations.push(format!("{}: {v}", other.title));
            }
        }
        for n in other.notes {
            self.notes.push(format!("{}: {n}", other.title));
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        writeln!(
            f,
            "{}: {status} ({} checked, {} violations)",
            self.title, self.checked, self.violation_count
        )?;
        for n in &self.notes {
            writeln!(f, "  {n}")?;
        }
        for v in &self.violations {
            writeln!(f, "  violation: {v}")?;
        }
        if self.violation_count > self.violations.len() {
            writeln!(f, "  ... {} more", self.violation_count - self.violations.len())?;
        }
        Ok(())
    }
}
