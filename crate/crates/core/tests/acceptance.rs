//! Runs every acceptance criterion at its stated parameters and prints one line per
//! criterion. Exits non-zero if a criterion fails that is not listed in
//! `KNOWN_FAILING`.

use std::process::ExitCode;
use std::time::Instant;

use dipath::verify::{run_criterion, VerifyConfig};

/// Criteria that fail under exhaustive checking, with the reason.
const KNOWN_FAILING: &[(u8, &str)] = &[(
    10,
    "at t = k the F gadget has no k-dipath t-colouring: x_1 reaches all t cycle vertices within t arcs",
)];

fn main() -> ExitCode {
    let cfg = VerifyConfig::default();
    let mut unexpected = 0;
    let mut passed = 0;
    for id in 1..=11 {
        let start = Instant::now();
        let o = run_criterion(id, &cfg);
        println!("{o} ({:.2?})", start.elapsed());
        passed += o.passed as usize;
        let known = KNOWN_FAILING.iter().find(|(k, _)| *k == id);
        match (o.passed, known) {
            (false, Some((_, why))) => println!("     known failure: {why}"),
            (false, None) => unexpected += 1,
            (true, Some(_)) => println!("     listed as failing but passed"),
            (true, None) => {}
        }
    }
    println!("acceptance: {passed} of 11 criteria pass, {unexpected} unexpected failures");
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
