//! Run each checker on a handful of inputs and print its verdict.

use radixroot::theorems::{verify_cor1, verify_lemma_dr, verify_main1, verify_main2};
use radixroot::{Radix, Rational};

fn main() -> radixroot::Result<()> {
    let eight = Radix::new(8)?;
    let ten = Radix::new(10)?;

    let q: Rational = "21".parse()?;
    let report = verify_main1(&q, 2, eight, 6)?;
    for t in &report.terms {
        println!("21/2^{} = {}  root {} orbit {}", t.j, t.value, t.root, t.orbit);
    }
    println!("orbit invariance: {}", verdict(report.pass));

    for (n, s, k) in [(9, 7, ten), (1, 28, ten), (21, 25, eight), (1, 3, ten)] {
        let r = verify_main2(n, s, k)?;
        match &r.reason {
            Some(why) => println!("{n}/{s} base {k}: skipped ({why})"),
            None => println!(
                "{n}/{s} base {k}: period {} digit sum {} root {} {}",
                r.period,
                r.repetend_digit_sum,
                r.repetend_root,
                verdict(r.pass)
            ),
        }
    }

    let q: Rational = "9".parse()?;
    println!("cor1 q=9 r=5: {}", verdict(verify_cor1(&q, 5, ten)?));
    let q: Rational = "1441/20".parse()?;
    println!("lemma q=1441/20: {}", verdict(verify_lemma_dr(&q, ten)?));
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
