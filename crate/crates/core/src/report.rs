//! Structured pass/fail records with a stable line grammar:
//! `<check-id> <PASS|FAIL> [key=value ...]`.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub values: Vec<(String, String)>,
}

impl Check {
    pub fn new(id: impl Into<String>, passed: bool) -> Self {
        Check { id: id.into(), passed, values: Vec::new() }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl fmt::Display) -> Self {
        self.values.push((key.into(), value.to_string()));
        self
    }

    /// Value recorded under `key`, if any.
    pub fn value(&self, key: &str) -> Option<&str> {
        self.values.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.id, if self.passed { "PASS" } else { "FAIL" })?;
        for (k, v) in &self.values {
            // values never contain spaces, so lines split cleanly on whitespace
            write!(f, " {}={}", k, v.replace(' ', ""))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_grammar() {
        let c = Check::new("canonical.eval", true).with("omega8_eval", -20160).with("note", "a b");
        assert_eq!(c.to_string(), "canonical.eval PASS omega8_eval=-20160 note=ab");
        assert_eq!(c.value("omega8_eval"), Some("-20160"));
        let mut r = VerificationReport::new();
        r.push(c);
        r.push(Check::new("x", false));
        assert!(!r.all_passed());
        assert_eq!(r.failures().count(), 1);
        assert_eq!(r.to_string().lines().count(), 2);
    }
}
