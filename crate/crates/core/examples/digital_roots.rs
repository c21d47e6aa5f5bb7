//! Digital roots of integers and of terminating fractions.

use radixroot::digroot::{digital_root, tf_digital_root};
use radixroot::{Natural, Radix, Rational};

fn main() -> radixroot::Result<()> {
    let ten = Radix::new(10)?;
    for n in [0u64, 9, 12345, 987654321] {
        let r = digital_root(&Natural::from(n), ten);
        let path: Vec<String> = r.trajectory.iter().map(|t| t.to_string()).collect();
        println!("{n}: root {} after {} steps [{}]", r.root, r.persistence, path.join(" -> "));
    }

    let big = Natural::from(1u32) << 200usize;
    for k in [2u64, 7, 10, 16, 36] {
        let r = digital_root(&big, Radix::new(k)?);
        println!("2^200 in base {k}: root {} persistence {}", r.root, r.persistence);
    }

    for (q, k) in [("1441/20", 10), ("161/36", 6), ("3/8", 10)] {
        let q: Rational = q.parse()?;
        let k = Radix::new(k)?;
        let r = tf_digital_root(&q, k)?;
        println!("{q} in base {k}: root {}", r.root);
    }
    Ok(())
}
