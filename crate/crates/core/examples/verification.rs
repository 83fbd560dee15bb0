//! Run the verification suites programmatically and inspect the report.
//! The same suites back `lnd verify`.
//!
//! Run with: cargo run --example verification

use lnd::verify::{run_suite, Suite};

fn main() {
    for (suite, n_max) in [
        (Suite::LowN, 3),
        (Suite::Sums, 40),
        (Suite::Ode, 30),
        (Suite::Recurrence, 10),
        (Suite::Oracle, 3),
    ] {
        let report = run_suite(suite, n_max, 1e-5, 42);
        let (passed, failed) = report.counts();
        println!(
            "suite {:<12} {:>4} cases: {passed} passed, {failed} failed",
            report.suite,
            report.cases.len()
        );
        for case in report.cases.iter().filter(|c| !c.passed) {
            println!("  FAIL {} {} residual={}", case.identity, case.subject, case.residual);
        }
    }
}
