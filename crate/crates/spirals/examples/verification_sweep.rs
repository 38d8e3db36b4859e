//! Run the full seeded verification battery programmatically, the same
//! suites the CLI `verify` subcommand and the acceptance tests use.
//!
//! Run with: cargo run --release --example verification_sweep

use spirals::verify::{all_suites, Sweep};

fn main() {
    let sweep = Sweep {
        n_max: 4,
        m_max: 3,
        seed: 42,
    };
    let mut failures = 0usize;
    for suite in all_suites(&sweep) {
        for check in &suite.checks {
            println!(
                "{} {}/{} — {}",
                if check.pass { "ok  " } else { "FAIL" },
                suite.name,
                check.label,
                check.detail
            );
            failures += usize::from(!check.pass);
        }
    }
    assert_eq!(failures, 0, "{failures} checks failed");
}
