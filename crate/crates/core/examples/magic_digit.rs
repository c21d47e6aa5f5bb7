use radixroot::theorems::solve_missing_digit;
use radixroot::Radix;

fn main() -> radixroot::Result<()> {
    for (pattern, k) in [("12?45", 10), ("9?", 10), ("2?7E", 16), ("10?1", 3), ("Z?Z", 36)] {
        let m = solve_missing_digit(pattern, Radix::new(k)?)?;
        match m.digit() {
            Some(d) => println!("{pattern} (base {k}): hidden digit {d}"),
            None => println!("{pattern} (base {k}): one of {:?}", m.candidates),
        }
    }
    Ok(())
}
