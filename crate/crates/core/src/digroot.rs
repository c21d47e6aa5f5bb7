//! Digital sums, additive persistence and digital roots in base `k`, and their
//! extension to terminating fractions through `k^rho0 * q`.

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{Natural, Rational};
use crate::error::{Error, Result};
use crate::radix::{min_exponent, to_digits, Radix};

/// Outcome of repeatedly summing digits until a single digit remains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DigitRootResult {
    pub root: u64,
    pub persistence: u64,
    /// Successive digit sums; empty when the input is already a single digit.
    #[serde(serialize_with = "serialize_naturals")]
    pub trajectory: Vec<Natural>,
}

fn serialize_naturals<S: serde::Serializer>(
    values: &[Natural],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        match v.to_u64() {
            Some(small) => seq.serialize_element(&small)?,
            None => seq.serialize_element(&v.to_string())?,
        }
    }
    seq.end()
}

fn digit_sum_u64(mut n: u64, k: u64) -> u64 {
    let mut sum = 0;
    while n > 0 {
        sum += n % k;
        n /= k;
    }
    sum
}

pub fn digit_sum(n: &Natural, k: Radix) -> Natural {
    if let Some(small) = n.to_u64() {
        // at most 64 digits, each below k
        if k.get() <= u64::MAX / 64 {
            return Natural::from(digit_sum_u64(small, k.get()));
        }
    }
    to_digits(n, k).into_iter().map(Natural::from).sum()
}

/// `digit_sum` composed with itself `times` times.
pub fn digit_sum_iter(n: &Natural, k: Radix, times: u64) -> Natural {
    let mut current = n.clone();
    for _ in 0..times {
        let next = digit_sum(&current, k);
        if next == current {
            break;
        }
        current = next;
    }
    current
}

pub fn additive_persistence(n: &Natural, k: Radix) -> u64 {
    digital_root(n, k).persistence
}

pub fn digital_root(n: &Natural, k: Radix) -> DigitRootResult {
    let base = k.to_natural();
    let mut trajectory = Vec::new();
    let mut current = n.clone();
    while current >= base {
        current = digit_sum(&current, k);
        trajectory.push(current.clone());
    }
    DigitRootResult {
        root: current.to_u64().expect("single digit"),
        persistence: trajectory.len() as u64,
        trajectory,
    }
}

/// Digit sum of a terminating fraction: the digit sum of `k^rho0 * q`.
pub fn tf_digit_sum(q: &Rational, k: Radix) -> Result<Natural> {
    Ok(digit_sum(&scaled_integer(q, k)?, k))
}

/// Digital root of a terminating fraction: the digital root of `k^rho0 * q`.
pub fn tf_digital_root(q: &Rational, k: Radix) -> Result<DigitRootResult> {
    Ok(digital_root(&scaled_integer(q, k)?, k))
}

/// `k^rho0 * q`, the integer formed by all digits of a terminating fraction.
pub fn scaled_integer(q: &Rational, k: Radix) -> Result<Natural> {
    let rho0 = min_exponent(q, k)?;
    let scaled = q * &num_traits::pow(k.to_natural(), rho0 as usize);
    debug_assert!(scaled.is_integer());
    Ok(scaled.floor())
}

/// Plain sum of a digit string, e.g. a repetend.
pub fn digit_sum_of_digits(digits: &[u64], k: Radix) -> Result<Natural> {
    if let Some(&d) = digits.iter().find(|&&d| d >= k.get()) {
        return Err(Error::domain(format!("digit {d} is not below base {k}")));
    }
    Ok(digits.iter().fold(Natural::zero(), |acc, &d| acc + d))
}
