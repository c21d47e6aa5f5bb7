use serde::Serialize;

use crate::error::{Error, Result};
use crate::radix::Radix;

/// Digits that make a pattern's digit sum a multiple of `k - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MissingDigit {
    pub candidates: Vec<u64>,
    pub ambiguous: bool,
}

impl MissingDigit {
    pub fn digit(&self) -> Option<u64> {
        (!self.ambiguous).then(|| self.candidates[0])
    }
}

/// Recovers the digit hidden behind the single `?` in `pattern`, assuming the
/// full number is a multiple of `k - 1`. When the residue forces 0, the digit
/// `k - 1` works as well and both are returned.
pub fn solve_missing_digit(pattern: &str, k: Radix) -> Result<MissingDigit> {
    if k.get() > 36 {
        return Err(Error::Usage(format!(
            "digit patterns support bases up to 36, got {k}"
        )));
    }
    let m = k.max_digit();
    let mut holes = 0;
    let mut sum = 0u64;
    for (i, c) in pattern.char_indices() {
        if c == '?' {
            holes += 1;
            continue;
        }
        let d = c
            .to_digit(36)
            .map(u64::from)
            .filter(|&d| d < k.get())
            .ok_or_else(|| Error::parse(i, format!("'{c}' is not a base-{k} digit")))?;
        sum = (sum + d) % m.max(1);
    }
    if holes != 1 {
        return Err(Error::Usage(format!(
            "pattern needs exactly one '?', found {holes}"
        )));
    }
    let needed = if m == 1 { 0 } else { (m - sum) % m };
    if needed == 0 {
        Ok(MissingDigit {
            candidates: vec![0, m],
            ambiguous: true,
        })
    } else {
        Ok(MissingDigit {
            candidates: vec![needed],
            ambiguous: false,
        })
    }
}
