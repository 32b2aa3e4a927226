//! Runs every acceptance criterion and prints one line per criterion.
//! Exits non-zero if any criterion fails. Pass criterion ids as arguments
//! to run a subset.

use std::process::ExitCode;

use ec_verify::{run, CRITERIA};

fn main() -> ExitCode {
    let wanted: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = Vec::new();
    for c in CRITERIA
        .iter()
        .filter(|c| wanted.is_empty() || wanted.contains(&c.id))
    {
        let outcome = run(c);
        println!("{}", outcome.line());
        if !outcome.verdict.passed {
            failed.push(outcome.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
