//! Base-`k` representations of nonnegative rationals.
//!
//! A rational terminates in base `k` exactly when every prime of its
//! denominator divides `k`; otherwise its expansion is eventually periodic.
//! Both shapes are carried by [`PositionalRepr`]: integer digits, a regular
//! fractional prefix and an optional repetend. Terminating values have two
//! expansions; the finite one is canonical and [`to_repeating`] produces the
//! other, ending in a repetend of `k - 1`.

mod repr;
mod text;

pub use repr::PositionalRepr;
pub use text::{format, parse};

use std::fmt;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{factorize_u64, multiplicative_order, Natural, Rational};
use crate::error::{Error, Result};

/// A numeral base `k >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Radix(u64);

impl Radix {
    pub fn new(k: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::domain(format!("base must be at least 2, got {k}")));
        }
        Ok(Self(k))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// The largest digit, `k - 1`.
    pub fn max_digit(self) -> u64 {
        self.0 - 1
    }

    pub fn to_natural(self) -> Natural {
        Natural::from(self.0)
    }

    pub(crate) fn pow(self, exp: u64) -> Natural {
        num_traits::pow(self.to_natural(), exp as usize)
    }
}

impl fmt::Display for Radix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReprKind {
    Terminating,
    Repeating,
}

/// Whether a rational terminates in a base, with its minimum exponent and
/// period. For repeating values `rho0` is the length of the regular prefix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadixClassification {
    pub kind: ReprKind,
    pub rho0: u64,
    #[serde(serialize_with = "serialize_natural")]
    pub period: Natural,
}

fn serialize_natural<S: serde::Serializer>(n: &Natural, s: S) -> std::result::Result<S::Ok, S::Error> {
    match n.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&n.to_string()),
    }
}

impl RadixClassification {
    pub fn is_terminating(&self) -> bool {
        self.kind == ReprKind::Terminating
    }
}

/// Splits a denominator into its `k`-smooth part and the cofactor `p` coprime
/// to `k`, returning `(rho0, smooth, p)` where `rho0` is the least exponent
/// with `smooth | k^rho0`.
pub(crate) fn split_denominator(den: &Natural, k: Radix) -> (u64, Natural, Natural) {
    let mut rest = den.clone();
    let mut smooth = Natural::one();
    let mut rho0 = 0u64;
    for (prime, k_exp) in factorize_u64(k.get()).expect("base is nonzero") {
        let mut count = 0u64;
        loop {
            let (quot, rem) = rest.div_rem(&Natural::from(prime));
            if !rem.is_zero() {
                break;
            }
            rest = quot;
            smooth *= prime;
            count += 1;
        }
        rho0 = rho0.max(count.div_ceil(u64::from(k_exp)));
    }
    (rho0, smooth, rest)
}

pub fn classify(q: &Rational, k: Radix) -> RadixClassification {
    let (rho0, _, p) = split_denominator(q.denom(), k);
    if p.is_one() {
        RadixClassification {
            kind: ReprKind::Terminating,
            rho0,
            period: Natural::zero(),
        }
    } else {
        let period = multiplicative_order(&k.to_natural(), &p)
            .expect("cofactor is coprime to the base");
        RadixClassification {
            kind: ReprKind::Repeating,
            rho0,
            period,
        }
    }
}

fn repeating_error(q: &Rational, k: Radix) -> Error {
    Error::domain(format!(
        "{q} does not terminate in base {k}: its denominator has a prime factor not dividing {k}"
    ))
}

/// Least `rho` such that `k^rho * q` is an integer.
pub fn min_exponent(q: &Rational, k: Radix) -> Result<u64> {
    let c = classify(q, k);
    if !c.is_terminating() {
        return Err(repeating_error(q, k));
    }
    Ok(c.rho0)
}

/// Length of the repetend of a repeating value.
pub fn period(q: &Rational, k: Radix) -> Result<Natural> {
    let c = classify(q, k);
    if c.is_terminating() {
        return Err(Error::domain(format!("{q} terminates in base {k}")));
    }
    Ok(c.period)
}

/// Base-`k` digits of `n`, most significant first; `[0]` for zero.
pub fn to_digits(n: &Natural, k: Radix) -> Vec<u64> {
    if n.is_zero() {
        return vec![0];
    }
    if let Ok(small) = u32::try_from(k.get()) {
        if small <= 256 {
            return n.to_radix_be(small).into_iter().map(u64::from).collect();
        }
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        let (quot, rem) = rest.div_rem(&k.to_natural());
        out.push(rem.to_u64().expect("remainder below base"));
        rest = quot;
    }
    out.reverse();
    out
}

/// Digits of `n` left-padded with zeros to exactly `width` places. `n` must be
/// below `k^width`.
fn to_digits_padded(n: &Natural, k: Radix, width: u64) -> Vec<u64> {
    if width == 0 {
        debug_assert!(n.is_zero());
        return Vec::new();
    }
    let digits = to_digits(n, k);
    let width = width as usize;
    debug_assert!(digits.len() <= width);
    let mut out = vec![0; width - digits.len()];
    out.extend(digits);
    out
}

/// Evaluates a most-significant-first digit string.
pub fn from_digits(digits: &[u64], k: Radix) -> Natural {
    let base = k.to_natural();
    digits
        .iter()
        .fold(Natural::zero(), |acc, &d| acc * &base + Natural::from(d))
}

fn split_scaled(scaled: &Natural, k: Radix, rho0: u64) -> (Vec<u64>, Vec<u64>) {
    let (int, frac) = scaled.div_rem(&k.pow(rho0));
    (to_digits(&int, k), to_digits_padded(&frac, k, rho0))
}

/// The finite expansion of a terminating value.
pub fn to_finite(q: &Rational, k: Radix) -> Result<PositionalRepr> {
    let rho0 = min_exponent(q, k)?;
    let scaled = (q * &k.pow(rho0)).floor();
    let (int, frac) = split_scaled(&scaled, k, rho0);
    Ok(PositionalRepr::from_parts_unchecked(k, int, frac, Vec::new()))
}

/// The expansion with infinitely many nonzero digits.
///
/// For repeating values this is the usual eventually periodic expansion with
/// the repetend starting right after the shortest possible regular prefix. For
/// terminating values it is the alternate expansion whose repetend is the
/// single digit `k - 1`.
pub fn to_repeating(q: &Rational, k: Radix) -> Result<PositionalRepr> {
    if q.is_zero() {
        return Err(Error::domain(
            "0 has no expansion with infinitely many nonzero digits",
        ));
    }
    let c = classify(q, k);
    let scale = k.pow(c.rho0);
    let shifted = q * &scale;
    if c.is_terminating() {
        let lowered = shifted.floor() - 1u32;
        let (int, frac) = split_scaled(&lowered, k, c.rho0);
        return Ok(PositionalRepr::from_parts_unchecked(
            k,
            int,
            frac,
            vec![k.max_digit()],
        ));
    }

    // k^rho0 q = whole + m/p with gcd(p, k) = 1, and m/p = R / (k^T - 1)
    // where R is the repetend read as a T-digit integer.
    let period = c
        .period
        .to_u64()
        .ok_or_else(|| Error::domain(format!("period {} is too long to expand", c.period)))?;
    let (whole, m) = shifted.numer().div_rem(shifted.denom());
    let p = shifted.denom();
    let cycle = k.pow(period) - 1u32;
    let (rep_value, rem) = (m * &cycle).div_rem(p);
    debug_assert!(rem.is_zero());
    let (int, frac) = split_scaled(&whole, k, c.rho0);
    let repetend = to_digits_padded(&rep_value, k, period);
    Ok(PositionalRepr::from_parts_unchecked(k, int, frac, repetend))
}

/// Exact value of a representation, using `R / (k^T - 1)` for the repetend.
pub fn value_of(r: &PositionalRepr) -> Rational {
    let k = r.base();
    let rho0 = r.frac_digits().len() as u64;
    let mut prefix = r.int_digits().to_vec();
    prefix.extend_from_slice(r.frac_digits());
    let regular = from_digits(&prefix, k);
    let scale = k.pow(rho0);
    if r.repetend().is_empty() {
        return Rational::new(regular, scale).expect("positive scale");
    }
    let cycle = k.pow(r.repetend().len() as u64) - 1u32;
    let rep = from_digits(r.repetend(), k);
    Rational::new(regular * &cycle + rep, scale * cycle).expect("positive denominator")
}

/// Re-expresses a representation in another base, canonically.
pub fn convert(r: &PositionalRepr, target: Radix) -> PositionalRepr {
    canonical(&value_of(r), target)
}

/// Finite expansion when the value terminates, repeating expansion otherwise.
pub fn canonical(q: &Rational, k: Radix) -> PositionalRepr {
    to_finite(q, k).unwrap_or_else(|_| to_repeating(q, k).expect("nonterminating value is positive"))
}
