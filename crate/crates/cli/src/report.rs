use std::fmt;

use ihull_core::hull::HarnessReport;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub details: String,
}

impl Check {
    pub fn new(name: impl Into<String>, verdict: Verdict, details: impl Into<String>) -> Self {
        Self { name: name.into(), verdict, details: details.into() }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, details: impl Into<String>) -> Self {
        Self::new(name, if ok { Verdict::Pass } else { Verdict::Fail }, details)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub scenario: String,
    pub checks: Vec<Check>,
    /// Full harness output, per space.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<HarnessReport>,
}

impl Report {
    pub fn new(scenario: &str) -> Self {
        Self { scenario: scenario.to_string(), checks: Vec::new(), reports: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// 0 when every check passes, 1 on any failure, 3 when only unknowns remain.
    pub fn exit_code(&self) -> u8 {
        if self.checks.iter().any(|c| c.verdict == Verdict::Fail) {
            1
        } else if self.checks.iter().any(|c| c.verdict == Verdict::Unknown) {
            3
        } else {
            0
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("scenario {}\n", self.scenario);
        for c in &self.checks {
            out.push_str(&format!("  {:<7} {}: {}\n", c.verdict, c.name, c.details));
        }
        let passed = self.checks.iter().filter(|c| c.verdict == Verdict::Pass).count();
        out.push_str(&format!("{passed}/{} checks passed", self.checks.len()));
        out
    }
}
