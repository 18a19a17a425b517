use std::io::{self, Write};
use std::process::ExitCode;

use distseries::CheckReport;

/// What a subcommand prints and how it exits.
pub enum Outcome {
    /// Everything passed: exit 0.
    Passed(Vec<String>),
    /// A check failed or an expression could not be normalized: exit 1.
    Failed(Vec<String>),
    /// Bad arguments or input files: exit 2.
    Usage(String),
}

impl Outcome {
    pub fn emit(self) -> ExitCode {
        match self {
            Outcome::Passed(lines) => {
                print_lines(&lines);
                ExitCode::SUCCESS
            }
            Outcome::Failed(lines) => {
                print_lines(&lines);
                ExitCode::from(1)
            }
            Outcome::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        }
    }
}

// a closed pipe (`| head`) just ends the output
fn print_lines(lines: &[String]) {
    let mut out = io::stdout().lock();
    for l in lines {
        if writeln!(out, "{l}").is_err() {
            return;
        }
    }
}

/// One `CHECK` line per entry, with the witness input and both legs for
/// failures, then a `PASS`/`FAIL` summary.
pub fn render(report: &CheckReport, summary: Option<&str>) -> Outcome {
    let mut lines = Vec::new();
    for e in &report.entries {
        if e.passed() {
            lines.push(format!("CHECK {} PASS", e.id));
        } else {
            match e.witnesses.first() {
                Some(w) => {
                    lines.push(format!("CHECK {} FAIL witness={}", e.id, w.input));
                    lines.push(format!("  left:  {}", w.left));
                    lines.push(format!("  right: {}", w.right));
                }
                None => lines.push(format!("CHECK {} FAIL", e.id)),
            }
        }
    }
    let tail = summary.map(str::to_string).unwrap_or_else(|| {
        format!("{} checks, {} instances", report.entries.len(), report.checked())
    });
    if report.passed() {
        lines.push(format!("PASS: {tail}"));
        Outcome::Passed(lines)
    } else {
        lines.push(format!("FAIL: {tail}, {} failing instances", report.failed()));
        Outcome::Failed(lines)
    }
}
