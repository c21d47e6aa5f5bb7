//! The ring of integers modulo `n`, its group of units, and the partition of
//! the ring into orbits under multiplication by units.
//!
//! Every orbit is labelled by the divisor `d` of `n` shared by all of its
//! members: the orbit of `x` is exactly the set of residues whose gcd with
//! `n` equals `gcd(x, n)`. [`orbit`] computes orbits by enumerating the
//! action, independently of [`gcd_class`], so that equality can be tested.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::arith::{divisors_u64, factorize_u64, gcd_u64, totient_u64};
use crate::error::{Error, Result};

/// Canonical representative of a congruence class modulo `modulus >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ResidueClass {
    value: u64,
    modulus: u64,
}

impl ResidueClass {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn same_ring(self, other: Self) -> Result<u64> {
        if self.modulus != other.modulus {
            return Err(Error::domain(format!(
                "residues modulo {} and {} do not interoperate",
                self.modulus, other.modulus
            )));
        }
        Ok(self.modulus)
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

fn check_modulus(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::domain(format!("modulus must be at least 2, got {n}")));
    }
    Ok(())
}

/// Reduces any integer (negative included) into `[0, n)`.
pub fn residue(x: impl Into<i128>, n: u64) -> Result<ResidueClass> {
    check_modulus(n)?;
    let value = x.into().rem_euclid(i128::from(n)) as u64;
    Ok(ResidueClass { value, modulus: n })
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(n)) as u64
}

pub fn res_add(a: ResidueClass, b: ResidueClass) -> Result<ResidueClass> {
    let n = a.same_ring(b)?;
    let value = ((u128::from(a.value) + u128::from(b.value)) % u128::from(n)) as u64;
    Ok(ResidueClass { value, modulus: n })
}

pub fn res_mul(a: ResidueClass, b: ResidueClass) -> Result<ResidueClass> {
    let n = a.same_ring(b)?;
    Ok(ResidueClass {
        value: mul_mod(a.value, b.value, n),
        modulus: n,
    })
}

/// Order of `x` in the additive group, `n / gcd(x, n)`.
pub fn additive_order(x: ResidueClass) -> u64 {
    x.modulus / gcd_u64(x.value, x.modulus)
}

/// Units of the ring: residues coprime to `n`.
pub fn units(n: u64) -> Result<BTreeSet<u64>> {
    check_modulus(n)?;
    Ok((1..n).filter(|&x| gcd_u64(x, n) == 1).collect())
}

/// Residues whose gcd with `n` is exactly `d`. Empty when `d` does not divide `n`.
pub fn gcd_class(n: u64, d: u64) -> Result<BTreeSet<u64>> {
    check_modulus(n)?;
    Ok((0..n).filter(|&x| gcd_u64(x, n) == d).collect())
}

/// Orbit of `x` under multiplication by every unit, by direct enumeration.
pub fn orbit(n: u64, x: ResidueClass) -> Result<BTreeSet<u64>> {
    check_modulus(n)?;
    if x.modulus != n {
        return Err(Error::domain(format!(
            "residue modulo {} acted on by units modulo {n}",
            x.modulus
        )));
    }
    Ok(units(n)?
        .into_iter()
        .map(|g| mul_mod(g, x.value, n))
        .collect())
}

/// Divisor label of the orbit containing `x`, i.e. `gcd(x, n)`.
pub fn orbit_of(n: u64, x: u64) -> u64 {
    gcd_u64(x % n.max(1), n)
}

/// The orbits of the unit-group action keyed by divisor label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    modulus: u64,
    classes: BTreeMap<u64, BTreeSet<u64>>,
}

impl OrbitPartition {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn classes(&self) -> &BTreeMap<u64, BTreeSet<u64>> {
        &self.classes
    }

    pub fn class(&self, d: u64) -> Option<&BTreeSet<u64>> {
        self.classes.get(&d)
    }

    /// Label of the class containing `x`, found by lookup.
    pub fn label_of(&self, x: u64) -> Option<u64> {
        self.classes
            .iter()
            .find(|(_, set)| set.contains(&x))
            .map(|(&d, _)| d)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

impl fmt::Display for OrbitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, set) in &self.classes {
            let items: Vec<String> = set.iter().map(u64::to_string).collect();
            writeln!(f, "Γ_{d}^{} = {{{}}}", self.modulus, items.join(","))?;
        }
        Ok(())
    }
}

pub fn orbit_partition(n: u64) -> Result<OrbitPartition> {
    check_modulus(n)?;
    let mut classes: BTreeMap<u64, BTreeSet<u64>> = divisors_u64(n)?
        .into_iter()
        .map(|d| (d, BTreeSet::new()))
        .collect();
    for x in 0..n {
        classes
            .get_mut(&gcd_u64(x, n))
            .expect("gcd(x, n) divides n")
            .insert(x);
    }
    debug_assert!(classes
        .iter()
        .all(|(&d, set)| set.len() as u64 == totient_u64(n / d).unwrap_or(0)));
    Ok(OrbitPartition { modulus: n, classes })
}

/// Whether the unit group modulo `n` is cyclic: `n` is 2, 4, `p^j` or `2p^j`
/// for an odd prime `p`.
pub fn unit_group_is_cyclic(n: u64) -> Result<bool> {
    check_modulus(n)?;
    if n == 2 || n == 4 {
        return Ok(true);
    }
    let odd = if n % 2 == 0 { n / 2 } else { n };
    if odd % 2 == 0 {
        return Ok(false);
    }
    Ok(factorize_u64(odd)?.len() == 1)
}
