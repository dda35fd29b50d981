//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use lozenge::checks::{criterion, CRITERIA, DEFAULT_SEED};

fn main() -> ExitCode {
    let mut all_ok = true;
    for (i, name) in CRITERIA.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let (ok, detail) = match criterion(n, DEFAULT_SEED) {
            Ok(recs) => {
                let bad: Vec<_> = recs.iter().filter(|r| !r.passed()).collect();
                let detail = match bad.first() {
                    None => format!("{} checks", recs.len()),
                    Some(r) => format!("{} of {} checks failed, first: {} {}", bad.len(), recs.len(), r.check, r.params),
                };
                (bad.is_empty() && !recs.is_empty(), detail)
            }
            Err(e) => (false, e.to_string()),
        };
        all_ok &= ok;
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {n:2} {verdict} {name}: {detail} in {:.1} s", start.elapsed().as_secs_f64());
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
