//! Partition Z_n into orbits under multiplication by units.

use radixroot::arith::divisors_u64;
use radixroot::modring::{orbit_partition, unit_group_is_cyclic, units};

fn main() -> radixroot::Result<()> {
    let n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let partition = orbit_partition(n)?;
    print!("{partition}");

    let u = units(n)?;
    println!("|units| = {}, cyclic: {}", u.len(), unit_group_is_cyclic(n)?);
    println!("divisors {:?}, orbits {}", divisors_u64(n)?, partition.len());
    for x in [1, n / 2, n - 1] {
        println!("label of {x} is {:?}", partition.label_of(x));
    }
    Ok(())
}
