//! Parse bracket literals and move them between bases.

use radixroot::radix::{convert, parse, value_of};
use radixroot::Radix;

fn main() -> radixroot::Result<()> {
    let jobs = [
        ("[1.(285714)]_10", 10),
        ("[42]_10", 3),
        ("[4.245]_6", 10),
        ("[4.24(5)]_6", 6),
        ("[0.(3)]_10", 2),
        ("[1,30.0,39(7)]_40", 16),
        ("[ff.8]_16", 40),
    ];
    for (literal, target) in jobs {
        let r = parse(literal)?;
        let out = convert(&r, Radix::new(target)?);
        println!("{literal:>20} = {:<10} -> {out}", value_of(&r).to_string());
    }

    for bad in ["[12]_1", "[1.2(3]_10", "[19]_9"] {
        match parse(bad) {
            Ok(r) => println!("{bad}: unexpectedly parsed as {r}"),
            Err(e) => println!("{bad}: {e}"),
        }
    }
    Ok(())
}
