//! Verification sweeps shared by the command line tool and the acceptance tests.
//!
//! Every sweep returns [`CheckRecord`]s in a fixed order. A record carries both sides of
//! the identity it checks as canonical strings, so a failing record is its own
//! counterexample.

mod suites;

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::exactalg::RatFunc;

pub use suites::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// One checked instance: `{check, params, lhs, rhs, status, millis}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub params: Value,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    pub millis: Option<u64>,
}

impl CheckRecord {
    /// Exact comparison of two rational functions.
    pub fn compare(check: &str, params: Value, lhs: &RatFunc, rhs: &RatFunc) -> Self {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        Self::with_status(check, params, lhs.canonical(), rhs.canonical(), status)
    }

    /// A yes/no property; `lhs` describes what was observed and `rhs` what was expected.
    pub fn property(check: &str, params: Value, holds: bool, observed: String, expected: String) -> Self {
        let status = if holds { Status::Pass } else { Status::Fail };
        Self::with_status(check, params, observed, expected, status)
    }

    pub fn error(check: &str, params: Value, e: &Error) -> Self {
        Self::with_status(check, params, e.to_string(), String::new(), Status::Error)
    }

    fn with_status(check: &str, params: Value, lhs: String, rhs: String, status: Status) -> Self {
        CheckRecord { check: check.to_string(), params, lhs, rhs, status, millis: None }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Runs `f`, turning errors into error records and recording the elapsed time.
pub(crate) fn timed(
    check: &str,
    params: Value,
    f: impl FnOnce() -> crate::Result<CheckRecord>,
) -> CheckRecord {
    let start = Instant::now();
    let mut rec = f().unwrap_or_else(|e| CheckRecord::error(check, params, &e));
    rec.millis = Some(start.elapsed().as_millis() as u64);
    rec
}

/// An ordered collection of records.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub seed: u64,
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new(seed: u64) -> Self {
        Report { seed, records: Vec::new() }
    }

    pub fn extend(&mut self, records: impl IntoIterator<Item = CheckRecord>) {
        self.records.extend(records);
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed())
    }

    /// Sets every `millis` to `None`, making the report reproducible byte for byte.
    pub fn strip_timing(&mut self) {
        for r in &mut self.records {
            r.millis = None;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per record, followed by a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            let _ = write!(out, "{status:5} {} {}", r.check, r.params);
            if let Some(ms) = r.millis {
                let _ = write!(out, " ({ms} ms)");
            }
            out.push('\n');
            if !r.passed() {
                let _ = writeln!(out, "      lhs: {}", r.lhs);
                let _ = writeln!(out, "      rhs: {}", r.rhs);
            }
        }
        let bad = self.failures().count();
        let _ = writeln!(out, "{} checks, {} failed (seed {})", self.records.len(), bad, self.seed);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn record_round_trip() {
        let r = CheckRecord::compare("x", json!({"n": 1}), &RatFunc::one(), &RatFunc::q_pow(1));
        assert_eq!(r.status, Status::Fail);
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains(r#""status":"fail""#));
        assert_eq!(serde_json::from_str::<CheckRecord>(&s).unwrap(), r);
    }

    #[test]
    fn text_lists_failures_with_both_sides() {
        let mut rep = Report::new(7);
        rep.extend([
            CheckRecord::compare("a", json!({}), &RatFunc::one(), &RatFunc::one()),
            CheckRecord::compare("b", json!({}), &RatFunc::one(), &RatFunc::zero()),
        ]);
        assert!(!rep.passed());
        let t = rep.to_text();
        assert!(t.contains("FAIL  b") && t.contains("lhs: 1") && t.contains("2 checks, 1 failed (seed 7)"));
    }

    #[test]
    fn errors_become_records() {
        let r = timed("e", json!(null), || Err(Error::DivisionByZero));
        assert_eq!(r.status, Status::Error);
        assert!(r.millis.is_some());
    }
}
