//! Structured verdict lists produced by the verifiers.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The check does not apply to this input.
    Skip,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub detail: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, detail: impl Into<String>, ok: bool) -> bool {
        self.push(name, detail, Verdict::from_bool(ok));
        ok
    }

    pub fn skip(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, detail, Verdict::Skip);
    }

    fn push(&mut self, name: impl Into<String>, detail: impl Into<String>, verdict: Verdict) {
        self.checks.push(Check {
            name: name.into(),
            detail: detail.into(),
            verdict,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> usize {
        self.count(Verdict::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(Verdict::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    fn count(&self, v: Verdict) -> usize {
        self.checks.iter().filter(|c| c.verdict == v).count()
    }

    /// The first failing check, if any.
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.verdict == Verdict::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Title line, FAIL lines first, the rest in order, then a summary.
impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.title.is_empty() {
            writeln!(f, "# {}", self.title)?;
        }
        let failing = self.checks.iter().filter(|c| c.verdict == Verdict::Fail);
        let rest = self.checks.iter().filter(|c| c.verdict != Verdict::Fail);
        for c in failing.chain(rest) {
            if c.detail.is_empty() {
                writeln!(f, "{} {}", c.verdict.tag(), c.name)?;
            } else {
                writeln!(f, "{} {}: {}", c.verdict.tag(), c.name, c.detail)?;
            }
        }
        let decided = self.passed() + self.failed();
        let skipped = self.count(Verdict::Skip);
        if self.checks.is_empty() {
            writeln!(f, "0 checks")
        } else if skipped > 0 {
            writeln!(f, "{}/{} passed, {} skipped", self.passed(), decided, skipped)
        } else {
            writeln!(f, "{}/{} passed", self.passed(), decided)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        assert_eq!(Report::default().to_string(), "0 checks\n");
    }

    #[test]
    fn single_pass() {
        let mut r = Report::default();
        r.check("one", "", true);
        assert_eq!(r.to_string(), "PASS one\n1/1 passed\n");
    }

    #[test]
    fn failures_come_first() {
        let mut r = Report::new("t");
        r.check("a", "x", true);
        r.check("b", "y", false);
        r.skip("c", "n/a");
        r.check("d", "z", false);
        assert_eq!(
            r.to_string(),
            "# t\nFAIL b: y\nFAIL d: z\nPASS a: x\nSKIP c: n/a\n1/3 passed, 1 skipped\n"
        );
        assert_eq!(r.first_failure().map(|c| c.name.as_str()), Some("b"));
        assert!(r.to_json().contains("\"verdict\": \"fail\""));
    }
}
