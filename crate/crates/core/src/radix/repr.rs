use std::fmt;

use serde::Serialize;

use super::Radix;
use crate::error::{Error, Result};

/// Digits of a nonnegative rational in some base.
///
/// Holds the integer digits (most significant first), the regular fractional
/// digits and the repetend. Instances are always in minimal form: no leading
/// integer zeros, no trailing fractional zeros in finite form, a repetend of
/// minimal length that starts as early as possible and is never all zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PositionalRepr {
    base: Radix,
    int_digits: Vec<u64>,
    frac_digits: Vec<u64>,
    repetend: Vec<u64>,
}

impl PositionalRepr {
    /// Builds a representation, rejecting digit lists that are out of range or
    /// not in minimal form.
    pub fn new(
        base: Radix,
        int_digits: Vec<u64>,
        frac_digits: Vec<u64>,
        repetend: Vec<u64>,
    ) -> Result<Self> {
        let r = Self {
            base,
            int_digits,
            frac_digits,
            repetend,
        };
        r.validate()?;
        Ok(r)
    }

    /// Unvalidated digits, only for evaluating user input before normalizing.
    pub(super) fn raw(
        base: Radix,
        int_digits: Vec<u64>,
        frac_digits: Vec<u64>,
        repetend: Vec<u64>,
    ) -> Self {
        Self {
            base,
            int_digits,
            frac_digits,
            repetend,
        }
    }

    pub(crate) fn from_parts_unchecked(
        base: Radix,
        int_digits: Vec<u64>,
        frac_digits: Vec<u64>,
        repetend: Vec<u64>,
    ) -> Self {
        let r = Self {
            base,
            int_digits,
            frac_digits,
            repetend,
        };
        debug_assert!(r.validate().is_ok(), "{:?}: {:?}", r, r.validate());
        r
    }

    fn validate(&self) -> Result<()> {
        let k = self.base.get();
        let all = self
            .int_digits
            .iter()
            .chain(&self.frac_digits)
            .chain(&self.repetend);
        if let Some(d) = all.into_iter().find(|&&d| d >= k) {
            return Err(Error::domain(format!("digit {d} is not below base {k}")));
        }
        match self.int_digits.as_slice() {
            [] => return Err(Error::domain("integer part needs at least one digit")),
            [0, _, ..] => return Err(Error::domain("integer part has a leading zero")),
            _ => {}
        }
        if self.repetend.is_empty() {
            if self.frac_digits.last() == Some(&0) {
                return Err(Error::domain("fractional part has a trailing zero"));
            }
            return Ok(());
        }
        if self.repetend.iter().all(|&d| d == 0) {
            return Err(Error::domain("repetend is all zeros"));
        }
        let t = self.repetend.len();
        if let Some(shorter) = (1..t).find(|&s| t % s == 0 && is_periodic(&self.repetend, s)) {
            return Err(Error::domain(format!(
                "repetend of length {t} repeats with period {shorter}"
            )));
        }
        if self.frac_digits.last().is_some() && self.frac_digits.last() == self.repetend.last() {
            return Err(Error::domain("repetend could start one digit earlier"));
        }
        Ok(())
    }

    pub fn base(&self) -> Radix {
        self.base
    }

    pub fn int_digits(&self) -> &[u64] {
        &self.int_digits
    }

    /// Regular fractional digits; their count is the minimum exponent.
    pub fn frac_digits(&self) -> &[u64] {
        &self.frac_digits
    }

    pub fn repetend(&self) -> &[u64] {
        &self.repetend
    }

    pub fn period(&self) -> usize {
        self.repetend.len()
    }

    pub fn is_finite(&self) -> bool {
        self.repetend.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.int_digits == [0] && self.frac_digits.is_empty() && self.repetend.is_empty()
    }

    /// True for the expansion of a terminating value that ends in `(k-1)`.
    pub fn is_alternate_form(&self) -> bool {
        self.repetend == [self.base.max_digit()]
    }
}

fn is_periodic(digits: &[u64], s: usize) -> bool {
    digits.iter().skip(s).zip(digits).all(|(a, b)| a == b)
}

impl fmt::Display for PositionalRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format(self))
    }
}
