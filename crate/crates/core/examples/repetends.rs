//! Classify a few fractions and print both of their expansions.
//!
//! ```text
//! cargo run --example repetends -- 161/36 6
//! ```

use radixroot::radix::{classify, to_finite, to_repeating};
use radixroot::{Radix, Rational};

fn main() -> radixroot::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cases: Vec<(Rational, Radix)> = if args.len() == 2 {
        vec![(args[0].parse()?, Radix::new(args[1].parse().unwrap_or(10))?)]
    } else {
        [("9/7", 10), ("161/36", 6), ("161/36", 10), ("1/28", 10), ("1/3", 2)]
            .iter()
            .map(|&(q, k)| Ok((q.parse()?, Radix::new(k)?)))
            .collect::<radixroot::Result<_>>()?
    };

    for (q, k) in cases {
        let c = classify(&q, k);
        let kind = if c.is_terminating() { "terminating" } else { "repeating" };
        println!("{q} in base {k}: {kind}, rho0={} period={}", c.rho0, c.period);
        if c.is_terminating() {
            println!("  finite     {}", to_finite(&q, k)?);
        }
        if !q.is_zero() {
            println!("  repeating  {}", to_repeating(&q, k)?);
        }
    }
    Ok(())
}
