use std::fmt;
use std::ops::{Add, Div, Mul};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::Natural;
use crate::error::{Error, Result};

/// Nonnegative fraction kept in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Natural,
    den: Natural,
}

impl Rational {
    pub fn new(num: Natural, den: Natural) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("rational with zero denominator"));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Natural, den: Natural) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        if g.is_one() {
            Self { num, den }
        } else {
            Self {
                num: num / &g,
                den: den / g,
            }
        }
    }

    pub fn from_integer(n: Natural) -> Self {
        Self {
            num: n,
            den: Natural::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(Natural::zero())
    }

    pub fn numer(&self) -> &Natural {
        &self.num
    }

    pub fn denom(&self) -> &Natural {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn floor(&self) -> Natural {
        &self.num / &self.den
    }

    pub fn checked_sub(&self, rhs: &Rational) -> Option<Rational> {
        let left = &self.num * &rhs.den;
        let right = &rhs.num * &self.den;
        (left >= right).then(|| Self::reduced(left - right, &self.den * &rhs.den))
    }

    /// `1 / self`, or `None` for zero.
    pub fn recip(&self) -> Option<Rational> {
        (!self.is_zero()).then(|| Self {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    /// `base^exp` for a possibly negative exponent. `base` must be nonzero when
    /// `exp < 0`.
    pub fn power_of(base: &Natural, exp: i64) -> Result<Rational> {
        let p = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
        if exp >= 0 {
            Ok(Self::from_integer(p))
        } else {
            Self::new(Natural::one(), p)
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Self::from_integer(Natural::from(n))
    }
}

impl From<Natural> for Rational {
    fn from(n: Natural) -> Self {
        Self::from_integer(n)
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational::reduced(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul<&Natural> for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Natural) -> Rational {
        Rational::reduced(&self.num * rhs, self.den.clone())
    }
}

/// Panics on division by zero, like integer division.
impl Div<&Natural> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Natural) -> Rational {
        assert!(!rhs.is_zero(), "division of a rational by zero");
        Rational::reduced(self.num.clone(), &self.den * rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Accepts `"a"` or `"a/b"` in decimal.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_part = |text: &str, offset: usize| -> Result<Natural> {
            if text.is_empty() {
                return Err(Error::parse(offset, "expected decimal digits"));
            }
            if let Some(i) = text.find(|c: char| !c.is_ascii_digit()) {
                return Err(Error::parse(offset + i, "expected a decimal digit"));
            }
            Ok(text.parse().expect("validated digits"))
        };
        match s.split_once('/') {
            None => Ok(Self::from_integer(parse_part(s, 0)?)),
            Some((n, d)) => {
                let num = parse_part(n, 0)?;
                let den = parse_part(d, n.len() + 1)?;
                if den.is_zero() {
                    return Err(Error::parse(n.len() + 1, "zero denominator"));
                }
                Self::new(num, den)
            }
        }
    }
}

/// Serialized as `{"num": "...", "den": "..."}` so consumers never truncate
/// to 64 bits.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Rational", 2)?;
        st.serialize_field("num", &self.num.to_string())?;
        st.serialize_field("den", &self.den.to_string())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: u64, d: u64) -> Rational {
        Rational::new(Natural::from(n), Natural::from(d)).unwrap()
    }

    #[test]
    fn construction_reduces() {
        let r = q(161, 36);
        assert_eq!((r.numer(), r.denom()), (&Natural::from(161u32), &Natural::from(36u32)));
        assert_eq!(q(4, 2), Rational::from(2));
        let z = q(0, 5);
        assert!(z.is_zero());
        assert_eq!(z.denom(), &Natural::one());
        assert!(Rational::new(Natural::from(1u32), Natural::zero()).is_err());
    }

    #[test]
    fn parses_literals() {
        assert_eq!("161/36".parse::<Rational>().unwrap(), q(161, 36));
        assert_eq!("7205".parse::<Rational>().unwrap(), Rational::from(7205));
        assert_eq!("10/4".parse::<Rational>().unwrap(), q(5, 2));
        assert!(matches!(
            "3/0".parse::<Rational>(),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            "12x".parse::<Rational>(),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!("-1".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(&q(2, 3) * &q(3, 4), q(1, 2));
        assert_eq!(&q(21, 1) / &Natural::from(4u32), q(21, 4));
        assert_eq!(q(1, 2).checked_sub(&q(1, 3)), Some(q(1, 6)));
        assert_eq!(q(1, 3).checked_sub(&q(1, 2)), None);
        assert_eq!(Rational::power_of(&Natural::from(6u32), -2).unwrap(), q(1, 36));
        assert_eq!(q(7, 2).floor(), Natural::from(3u32));
        assert_eq!(q(7, 2).recip(), Some(q(2, 7)));
        assert!(q(1, 3) < q(1, 2));
        assert!(q(5, 2) > Rational::from(2));
    }

    #[test]
    fn serializes_as_strings() {
        let json = serde_json::to_string(&q(161, 36)).unwrap();
        assert_eq!(json, r#"{"num":"161","den":"36"}"#);
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent(n in 0u64..10_000, d in 1u64..10_000) {
            let r = q(n, d);
            let again = Rational::new(r.numer().clone(), r.denom().clone()).unwrap();
            prop_assert_eq!(&again, &r);
            prop_assert!(r.numer().gcd(r.denom()).is_one());
            prop_assert_eq!(r.numer() * Natural::from(d), Natural::from(n) * r.denom());
        }
    }
}
