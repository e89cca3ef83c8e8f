//! Randomized sweeps over the sufficient conditions for Poincaré to win and
//! over the validity of both bounds.
//!
//! Run with `cargo run --release --example theorem_sweeps`.

use canonical_paths::verify::{run_sweep, Suite, SweepConfig};

fn main() {
    let config = SweepConfig {
        max_n: 10,
        trials: 200,
        seed: 42,
        r_max: 30,
    };
    for suite in [
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::BoundsValidity,
        Suite::Tv,
    ] {
        let summary = run_sweep(suite, &config).unwrap();
        println!(
            "{:<16} {:>5} checks  {}",
            suite.to_string(),
            summary.checks,
            if summary.passed() { "pass" } else { "FAIL" }
        );
        for failure in &summary.failures {
            println!("{failure}");
        }
    }
}
