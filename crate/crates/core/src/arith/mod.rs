//! Natural-number arithmetic: gcd, trial-division factorization, divisor
//! enumeration and Euler's totient, plus the reduced [`Rational`] type.
//!
//! All entry points accept arbitrary-precision [`Natural`]s. Values that fit
//! in a machine word take a `u64` fast path; the `*_u64` variants are public
//! for callers (such as [`crate::modring`]) that work with small moduli.

mod rational;

pub use rational::Rational;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Unbounded nonnegative integer.
pub type Natural = num_bigint::BigUint;

/// Prime decomposition `p1^e1 * ... * pm^em` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(Natural, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(Natural, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &Natural> {
        self.factors.iter().map(|(p, _)| p)
    }

    /// Exponent of `prime` in the decomposition (0 if absent).
    pub fn exponent_of(&self, prime: &Natural) -> u32 {
        self.factors
            .iter()
            .find(|(p, _)| p == prime)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// Multiplies the factors back together.
    pub fn product(&self) -> Natural {
        self.factors
            .iter()
            .fold(Natural::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize))
    }

    /// Number of divisors, `prod (e_i + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }
}

pub fn gcd(a: &Natural, b: &Natural) -> Result<Natural> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::domain("gcd(0, 0) is undefined"));
    }
    Ok(a.gcd(b))
}

pub fn is_coprime(a: &Natural, b: &Natural) -> Result<bool> {
    gcd(a, b).map(|g| g.is_one())
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Deterministic primality by trial division up to the square root.
pub fn is_prime_u64(n: u64) -> bool {
    match n {
        0 | 1 => false,
        2 | 3 => true,
        _ if n % 2 == 0 || n % 3 == 0 => false,
        _ => {
            let mut d = 5u64;
            while d.checked_mul(d).is_some_and(|sq| sq <= n) {
                if n % d == 0 || n % (d + 2) == 0 {
                    return false;
                }
                d += 6;
            }
            true
        }
    }
}

pub fn is_prime(n: &Natural) -> bool {
    match n.to_u64() {
        Some(v) => is_prime_u64(v),
        None => {
            let f = trial_division_big(n.clone());
            f.len() == 1 && f[0].1 == 1
        }
    }
}

/// Trial division with a 2,3 wheel. Returns `(prime, exponent)` pairs.
pub fn factorize_u64(n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::domain("cannot factorize 0"));
    }
    let mut out = Vec::new();
    let mut rest = n;
    let mut take = |d: u64, rest: &mut u64| {
        if *rest % d == 0 {
            let mut e = 0;
            while *rest % d == 0 {
                *rest /= d;
                e += 1;
            }
            out.push((d, e));
        }
    };
    take(2, &mut rest);
    take(3, &mut rest);
    let mut d = 5u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= rest) {
        take(d, &mut rest);
        take(d + 2, &mut rest);
        d += 6;
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    Ok(out)
}

fn trial_division_big(mut rest: Natural) -> Vec<(Natural, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    loop {
        if let Some(small) = rest.to_u64() {
            out.extend(
                factorize_u64(small)
                    .expect("nonzero cofactor")
                    .into_iter()
                    .map(|(p, e)| (Natural::from(p), e)),
            );
            return out;
        }
        let dd = Natural::from(d);
        if &dd * &dd > rest {
            out.push((rest, 1));
            return out;
        }
        let mut e = 0;
        while (&rest % d).is_zero() {
            rest /= d;
            e += 1;
        }
        if e > 0 {
            out.push((dd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
}

pub fn factorize(n: &Natural) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::domain("cannot factorize 0"));
    }
    let factors = match n.to_u64() {
        Some(v) => factorize_u64(v)?
            .into_iter()
            .map(|(p, e)| (Natural::from(p), e))
            .collect(),
        None => trial_division_big(n.clone()),
    };
    Ok(Factorization { factors })
}

/// Ascending divisors of `n`. `n = 0` is rejected since every positive
/// integer divides it.
pub fn divisors(n: &Natural) -> Result<Vec<Natural>> {
    if n.is_zero() {
        return Err(Error::domain("the divisor set of 0 is infinite"));
    }
    let f = factorize(n)?;
    let mut divs = vec![Natural::one()];
    for (p, e) in f.factors() {
        let current = divs.len();
        let mut power = Natural::one();
        for _ in 0..*e {
            power *= p;
            for i in 0..current {
                let d = &divs[i] * &power;
                divs.push(d);
            }
        }
    }
    divs.sort();
    Ok(divs)
}

pub fn divisors_u64(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::domain("the divisor set of 0 is infinite"));
    }
    let mut divs = vec![1u64];
    for (p, e) in factorize_u64(n)? {
        let current = divs.len();
        let mut power = 1u64;
        for _ in 0..e {
            power *= p;
            for i in 0..current {
                divs.push(divs[i] * power);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Euler's totient via `n * prod (1 - 1/p)`.
pub fn totient(n: &Natural) -> Result<Natural> {
    if n.is_zero() {
        return Err(Error::domain("totient(0) is undefined"));
    }
    let f = factorize(n)?;
    let mut phi = n.clone();
    for p in f.primes() {
        phi = phi / p * (p - 1u32);
    }
    Ok(phi)
}

pub fn totient_u64(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("totient(0) is undefined"));
    }
    Ok(factorize_u64(n)?
        .into_iter()
        .fold(n, |phi, (p, _)| phi / p * (p - 1)))
}

/// Smallest `t >= 1` with `base^t = 1 (mod modulus)`.
///
/// The order divides `phi(modulus)`, so the search starts from the totient and
/// strips prime factors while the power stays at 1. Falls back to stepping
/// through powers when the totient cannot be formed.
pub fn multiplicative_order(base: &Natural, modulus: &Natural) -> Result<Natural> {
    if modulus.is_zero() {
        return Err(Error::domain("multiplicative order modulo 0 is undefined"));
    }
    if modulus.is_one() {
        return Ok(Natural::one());
    }
    if !is_coprime(base, modulus)? {
        return Err(Error::domain(format!(
            "{base} is not a unit modulo {modulus}"
        )));
    }
    let b = base % modulus;
    let mut order = totient(modulus)?;
    for p in factorize(&order.clone())?.primes() {
        while order.is_multiple_of(p) {
            let candidate = &order / p;
            if b.modpow(&candidate, modulus).is_one() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    debug_assert!(b.modpow(&order, modulus).is_one());
    Ok(order)
}
