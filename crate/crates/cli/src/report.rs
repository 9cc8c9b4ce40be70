//! Human and machine forms of a command's outcome. Both are rendered from the
//! same list of checks, so their verdicts cannot disagree.

use std::fmt::Write as _;

use malcev_core::io::{self, REPORT_FORMAT};
use malcev_core::{AxiomReport, IdentityReport, Scalar};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Holds wherever `condition` is nonzero.
    Conditional { condition: Scalar },
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub arguments: Vec<String>,
    pub residual: Option<String>,
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, arguments: Vec::new(), residual: None, detail: None }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { status: Status::Fail, detail: Some(detail.into()), ..Check::pass(name) }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, detail)
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// A check that is expected to fail: it passes exactly when `r` fails.
    pub fn expect_failure(r: &IdentityReport) -> Self {
        let name = format!("{} fails", r.name);
        match &r.witness {
            Some(w) => Check {
                arguments: w.arguments.clone(),
                residual: Some(w.residual.to_string()),
                ..Check::pass(name)
            },
            None => Check::fail(name, "identity holds everywhere"),
        }
    }

    fn status_word(&self) -> &'static str {
        match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Conditional { .. } => "conditional",
        }
    }

    fn to_json(&self) -> Value {
        let mut v = json!({ "name": self.name, "verdict": self.status_word() });
        if let Some(r) = &self.residual {
            v["witness"] = json!({ "arguments": self.arguments, "residual": r });
        }
        if let Some(d) = &self.detail {
            v["detail"] = json!(d);
        }
        if let Status::Conditional { condition } = &self.status {
            v["condition"] = json!(condition.to_string());
        }
        v
    }
}

impl From<&IdentityReport> for Check {
    fn from(r: &IdentityReport) -> Self {
        match &r.witness {
            None => Check::pass(&r.name),
            Some(w) => Check {
                status: Status::Fail,
                arguments: w.arguments.clone(),
                residual: Some(w.residual.to_string()),
                ..Check::pass(&r.name)
            },
        }
    }
}

#[derive(Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
    /// Free-form lines printed after the checks, e.g. rendered products.
    pub notes: Vec<String>,
    pub output: Option<String>,
    /// The derived or found object, included in the machine report.
    pub result: Option<Value>,
}

impl Report {
    pub fn push(&mut self, c: impl Into<Check>) {
        self.checks.push(c.into());
    }

    pub fn push_axioms(&mut self, a: &AxiomReport) {
        self.checks.extend(a.checks.iter().map(Check::from));
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else {
            0
        }
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let word = c.status_word().to_uppercase();
            let _ = write!(out, "{word} {}", c.name);
            if let Some(r) = &c.residual {
                let _ = write!(out, " at ({}): {r}", c.arguments.join(", "));
            }
            if let Some(d) = &c.detail {
                let _ = write!(out, " [{d}]");
            }
            out.push('\n');
        }
        for n in &self.notes {
            out.push_str(n);
            out.push('\n');
        }
        if let Some(p) = &self.output {
            let _ = writeln!(out, "wrote {p}");
        }
        out
    }

    pub fn machine(&self, command: &[String]) -> String {
        let v = json!({
            "format": REPORT_FORMAT,
            "command": command,
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
            "output": self.output,
            "result": self.result,
            "exit_code": self.exit_code(),
        });
        io::to_canonical_string(&v)
    }
}

/// Machine report for a command that stopped with an error.
pub fn error_report(command: &[String], message: &str, code: i32) -> String {
    let v = json!({
        "format": REPORT_FORMAT,
        "command": command,
        "checks": [],
        "error": message,
        "exit_code": code,
    });
    io::to_canonical_string(&v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_check_sets_exit_code() {
        let mut r = Report::default();
        r.push(Check::pass("a"));
        assert_eq!(r.exit_code(), 0);
        r.push(Check::fail("b", "no"));
        assert_eq!(r.exit_code(), 1);
        assert!(r.human().contains("FAIL b [no]"));
    }

    #[test]
    fn conditional_is_not_a_failure() {
        let mut r = Report::default();
        r.push(Check { status: Status::Conditional { condition: Scalar::from_ratio(2, 1) }, ..Check::pass("non-degeneracy") });
        assert_eq!(r.exit_code(), 0);
        let m = r.machine(&["x".into()]);
        assert!(m.contains("\"conditional\""));
        assert!(m.contains("\"condition\": \"2\""));
    }
}
