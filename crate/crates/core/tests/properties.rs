mod common;

use proptest::prelude::*;

use radixroot::arith::gcd_u64;
use radixroot::digroot::{digit_sum, digital_root, tf_digit_sum, tf_digital_root};
use radixroot::modring::{orbit_of, units};
use radixroot::radix::{classify, format, parse, to_finite, to_repeating, value_of};
use radixroot::{Natural, Radix, Rational};

fn rational(a: u64, b: u64) -> Rational {
    Rational::new(Natural::from(a), Natural::from(b)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn expansions_invert_exactly(a in 0u64..=500, b in 1u64..=500, base in 2u64..=16) {
        let k = Radix::new(base).unwrap();
        let x = rational(a, b);
        if classify(&x, k).is_terminating() {
            let fin = to_finite(&x, k).unwrap();
            prop_assert_eq!(value_of(&fin), x.clone());
            prop_assert_eq!(to_finite(&value_of(&fin), k).unwrap(), fin);
        }
        if !x.is_zero() {
            let rep = to_repeating(&x, k).unwrap();
            prop_assert_eq!(value_of(&rep), x.clone());
            prop_assert_eq!(to_repeating(&value_of(&rep), k).unwrap(), rep.clone());
            let t = rep.repetend().len();
            for shorter in (1..t).filter(|s| t % s == 0) {
                let periodic = rep.repetend().iter().skip(shorter).zip(rep.repetend()).all(|(p, q)| p == q);
                prop_assert!(!periodic);
            }
        }
    }

    #[test]
    fn text_round_trip(a in 0u64..=100_000, b in 1u64..=1000, base in 2u64..=40, alt in any::<bool>()) {
        let k = Radix::new(base).unwrap();
        let x = rational(a, b);
        let r = if alt && !x.is_zero() {
            to_repeating(&x, k).unwrap()
        } else if classify(&x, k).is_terminating() {
            to_finite(&x, k).unwrap()
        } else {
            to_repeating(&x, k).unwrap()
        };
        prop_assert_eq!(parse(&format(&r)).unwrap(), r);
    }

    #[test]
    fn terminating_split_matches_long_division(a in 0u64..=100_000, b in 1u64..=3000, base in 2u64..=16) {
        let x = rational(a, b);
        let k = Radix::new(base).unwrap();
        let oracle = common::long_division(
            x.numer().try_into().unwrap(),
            x.denom().try_into().unwrap(),
            base,
        );
        let c = classify(&x, k);
        prop_assert_eq!(c.is_terminating(), oracle.2.is_empty());
        if !c.is_terminating() {
            prop_assert_eq!(c.rho0 as usize, oracle.1.len());
            prop_assert_eq!(c.period, Natural::from(oracle.2.len()));
        }
    }

    #[test]
    fn lemma_on_terminating_values(a in 0u64..=10_000, e2 in 0u32..6, e5 in 0u32..4) {
        let k = Radix::new(10).unwrap();
        let x = rational(a, 2u64.pow(e2) * 5u64.pow(e5));
        let sum: u64 = tf_digit_sum(&x, k).unwrap().try_into().unwrap();
        let root = tf_digital_root(&x, k).unwrap().root;
        prop_assert_eq!(sum % 9, root % 9);
    }

    #[test]
    fn digit_sum_congruence_on_big_values(digits in proptest::collection::vec(0u8..10, 1..200), base in 3u64..=36) {
        let value: Natural = digits.iter().fold(Natural::from(0u32), |acc, &d| acc * 7u32 + d);
        let k = Radix::new(base).unwrap();
        let m = Natural::from(base - 1);
        let s = digit_sum(&value, k);
        prop_assert_eq!(&s % &m, &value % &m);
        let r = digital_root(&value, k);
        prop_assert!(r.root < base);
        prop_assert!(r.trajectory.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn unit_action_preserves_labels(n in 2u64..=150, x in 0u64..150) {
        let x = x % n;
        for g in units(n).unwrap() {
            prop_assert_eq!(orbit_of(n, g * x % n), orbit_of(n, x));
            prop_assert_eq!(gcd_u64(g, n), 1);
        }
    }
}
