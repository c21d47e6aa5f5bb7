//! Exhaustive sweep over small bases.
//!
//! ```text
//! cargo run --release --example fuzz -- 4
//! ```

use std::time::Instant;

use radixroot::theorems::{fuzz_main1, fuzz_main2};

fn main() -> radixroot::Result<()> {
    let workers = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));

    let start = Instant::now();
    let s = fuzz_main1(2..=16, 120, 5, workers)?;
    println!(
        "main1: tested={} passed={} failed={} degenerate={} ({:.2?})",
        s.tested,
        s.passed,
        s.failed,
        s.degenerate,
        start.elapsed()
    );

    let start = Instant::now();
    let s = fuzz_main2(2..=16, 100, 100, workers)?;
    println!(
        "main2: tested={} passed={} failed={} skipped={} ({:.2?})",
        s.tested,
        s.passed,
        s.failed,
        s.skipped,
        start.elapsed()
    );
    for f in s.failures.iter().take(5) {
        println!("  counterexample {}/{} base {}", f.n, f.s, f.base);
    }
    Ok(())
}
