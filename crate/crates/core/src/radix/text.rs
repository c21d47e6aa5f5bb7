//! Bracket notation: `[int.frac(repetend)]_base`.
//!
//! Bases up to 36 use one character per digit (`0-9`, then `A-Z`; lowercase
//! is accepted on input). Larger bases write each digit in decimal and
//! separate digits within a group by commas, e.g. `[1,30.0,39(7)]_40`.

use super::{to_finite, to_repeating, value_of, PositionalRepr, Radix};
use crate::error::{Error, Result};

const ALPHABET: &[u8; 36] = b"0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";

fn uses_alphabet(k: Radix) -> bool {
    k.get() <= 36
}

fn write_group(out: &mut String, digits: &[u64], k: Radix) {
    if uses_alphabet(k) {
        out.extend(digits.iter().map(|&d| char::from(ALPHABET[d as usize])));
    } else {
        let parts: Vec<String> = digits.iter().map(u64::to_string).collect();
        out.push_str(&parts.join(","));
    }
}

pub fn format(r: &PositionalRepr) -> String {
    let k = r.base();
    let mut out = String::from("[");
    write_group(&mut out, r.int_digits(), k);
    if !r.frac_digits().is_empty() || !r.repetend().is_empty() {
        out.push('.');
        write_group(&mut out, r.frac_digits(), k);
    }
    if !r.repetend().is_empty() {
        out.push('(');
        write_group(&mut out, r.repetend(), k);
        out.push(')');
    }
    out.push_str("]_");
    out.push_str(&k.to_string());
    out
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    end: usize,
    base: Radix,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        (self.pos < self.end).then(|| self.bytes[self.pos])
    }

    fn check_digit(&self, value: u64, at: usize) -> Result<u64> {
        if value >= self.base.get() {
            return Err(Error::parse(
                at,
                format!("digit {value} is not below base {}", self.base),
            ));
        }
        Ok(value)
    }

    /// Reads a possibly empty run of digits.
    fn group(&mut self) -> Result<Vec<u64>> {
        let mut digits = Vec::new();
        if uses_alphabet(self.base) {
            while let Some(c) = self.peek() {
                let value = match c {
                    b'0'..=b'9' => u64::from(c - b'0'),
                    b'A'..=b'Z' => u64::from(c - b'A') + 10,
                    b'a'..=b'z' => u64::from(c - b'a') + 10,
                    _ => break,
                };
                digits.push(self.check_digit(value, self.pos)?);
                self.pos += 1;
            }
            return Ok(digits);
        }
        loop {
            let start = self.pos;
            while matches!(self.peek(), Some(b'0'..=b'9')) {
                self.pos += 1;
            }
            if start == self.pos {
                if digits.is_empty() {
                    return Ok(digits);
                }
                return Err(Error::parse(start, "expected a digit after ','"));
            }
            let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
            let value = text
                .parse::<u64>()
                .map_err(|_| Error::parse(start, "digit value overflows"))?;
            digits.push(self.check_digit(value, start)?);
            if self.peek() == Some(b',') {
                self.pos += 1;
            } else {
                return Ok(digits);
            }
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", char::from(c))))
        }
    }
}

fn parse_base(text: &str, offset: usize) -> Result<Radix> {
    if text.is_empty() {
        return Err(Error::parse(offset, "missing base after '_'"));
    }
    if let Some(i) = text.find(|c: char| !c.is_ascii_digit()) {
        return Err(Error::parse(offset + i, "base must be a decimal number"));
    }
    let k: u64 = text
        .parse()
        .map_err(|_| Error::parse(offset, "base overflows"))?;
    Radix::new(k).map_err(|_| Error::parse(offset, format!("base must be at least 2, got {k}")))
}

/// Parses bracket notation and returns the minimal representation of the
/// same value. A repetend of all `k - 1` keeps the alternate form; a repetend
/// of zeros collapses to the finite form.
pub fn parse(text: &str) -> Result<PositionalRepr> {
    if !text.starts_with('[') {
        return Err(Error::parse(0, "expected '['"));
    }
    let close = text
        .rfind("]_")
        .ok_or_else(|| Error::parse(text.len(), "expected ']_' followed by a base"))?;
    let base = parse_base(&text[close + 2..], close + 2)?;

    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 1,
        end: close,
        base,
    };
    let int = cur.group()?;
    if int.is_empty() {
        return Err(Error::parse(cur.pos, "expected an integer digit"));
    }
    let mut frac = Vec::new();
    let mut rep = None;
    if cur.peek() == Some(b'.') {
        cur.pos += 1;
        frac = cur.group()?;
        if cur.peek() == Some(b'(') {
            cur.pos += 1;
            let open = cur.pos;
            let group = cur.group()?;
            if group.is_empty() {
                return Err(Error::parse(open, "empty repetend group"));
            }
            cur.expect(b')')?;
            rep = Some(group);
        } else if frac.is_empty() {
            return Err(Error::parse(cur.pos, "expected digits after '.'"));
        }
    }
    if cur.pos != close {
        return Err(Error::parse(cur.pos, "unexpected character"));
    }

    let all_zero = rep.as_ref().is_none_or(|r| r.iter().all(|&d| d == 0));
    let raw = PositionalRepr::raw(base, int, frac, rep.unwrap_or_default());
    let value = value_of(&raw);
    if all_zero {
        to_finite(&value, base)
    } else {
        to_repeating(&value, base)
    }
}
