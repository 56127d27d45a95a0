//! Structured check reports.
//!
//! Every verification routine returns a [`Report`]: a flat list of named
//! checks with exact residual summaries. Serialization is deterministic
//! (struct field order, no maps, canonical rational strings), which is
//! what makes CLI certificates byte-stable.

use serde::{Deserialize, Serialize};

use crate::matrix::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Vacuous,
    Partial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub residual_summary: String,
    pub details: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Records an identity that must hold exactly: the residual matrix
    /// must be identically zero.
    pub fn residual_check(&mut self, name: &str, residual: &Matrix, details: &str) {
        let status = if residual.is_zero() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        self.push(Check {
            name: name.to_string(),
            status,
            residual_summary: summarize_residual(residual),
            details: details.to_string(),
        });
    }

    pub fn condition_check(&mut self, name: &str, ok: bool, details: &str) {
        self.push(Check {
            name: name.to_string(),
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            residual_summary: if ok { "ok".into() } else { "violated".into() },
            details: details.to_string(),
        });
    }

    pub fn vacuous(&mut self, name: &str, details: &str) {
        self.push(Check {
            name: name.to_string(),
            status: CheckStatus::Vacuous,
            residual_summary: "vacuous".into(),
            details: details.to_string(),
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

/// "0" for a zero residual, otherwise the nonzero entry count plus the
/// first offending entry.
pub fn summarize_residual(residual: &Matrix) -> String {
    let mut nonzero = 0usize;
    let mut first = None;
    for r in 0..residual.rows() {
        for c in 0..residual.cols() {
            if !residual.at(r, c).is_zero() {
                nonzero += 1;
                if first.is_none() {
                    first = Some(format!("({r},{c})={}", residual.at(r, c)));
                }
            }
        }
    }
    match first {
        None => "0".to_string(),
        Some(entry) => format!("{nonzero} nonzero entries, first {entry}"),
    }
}
