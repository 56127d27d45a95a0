//! The certificate format printed on stdout.
//!
//! Serialization is deterministic: struct fields keep declaration
//! order, `inputs` uses a sorted map, and every number inside check
//! text is a canonical rational string. Two runs of the same command on
//! the same inputs produce byte-identical output.

use serde::Serialize;
use serde_json::Value;

use dkp_core::report::{Check, CheckStatus, Report};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CliReport {
    pub tool_version: String,
    pub command: String,
    pub inputs: Value,
    pub checks: Vec<Check>,
    pub overall: Overall,
}

impl CliReport {
    pub fn new(command: &str, inputs: Value, report: Report) -> Self {
        let overall = if report.passed() {
            Overall::Pass
        } else {
            Overall::Fail
        };
        Self {
            tool_version: TOOL_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            checks: report.checks,
            overall,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Overall::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    /// One line per check plus an overall line, for human consumption.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let tag = match check.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Vacuous => "----",
                CheckStatus::Partial => "PART",
            };
            out.push_str(&format!("{tag}  {}\n", check.name));
            if check.status == CheckStatus::Fail {
                out.push_str(&format!("      residual: {}\n", check.residual_summary));
            }
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.passed() { "pass" } else { "fail" }
        ));
        out
    }
}
