//! Pass/fail reports shared by every verification routine.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Informational checks are reported but never fail the report.
    pub informational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub title: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(title: impl Into<String>) -> Self {
        VerificationReport {
            title: title.into(),
            checks: Vec::new(),
            notes: Vec::new(),
            passed: true,
        }
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            informational: false,
            witness: if passed { None } else { witness },
        });
    }

    pub fn info(&mut self, name: impl Into<String>, value: bool, detail: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: value,
            informational: true,
            witness: detail,
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.informational && !c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.failures().next()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Appends every check of `other`, prefixing names with its title.
    pub fn merge(&mut self, other: VerificationReport) {
        for c in other.checks {
            let name = format!("{}: {}", other.title, c.name);
            if c.informational {
                self.info(name, c.passed, c.witness);
            } else {
                self.record(name, c.passed, c.witness);
            }
        }
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} [{}]",
            self.title,
            if self.passed { "PASS" } else { "FAIL" }
        )?;
        for c in &self.checks {
            let tag = match (c.informational, c.passed) {
                (true, true) => "info:yes",
                (true, false) => "info:no",
                (false, true) => "pass",
                (false, false) => "FAIL",
            };
            write!(f, "  [{tag}] {}", c.name)?;
            if let Some(w) = &c.witness {
                write!(f, "  -- {w}")?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
