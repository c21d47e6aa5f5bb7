//! Executable checks of the digital-root invariance results.
//!
//! * [`verify_lemma_dr`]: the digit sum and digital root of a terminating
//!   fraction agree modulo `k - 1`.
//! * [`verify_main1`]: dividing a terminating fraction by powers of a proper
//!   divisor `r` of `k` keeps its digital root inside one orbit of the unit
//!   group of `Z_(k-1)`, and `r^j * R_j = R_0 (mod k - 1)`.
//! * [`verify_cor1`]: a digital root of `k - 1` survives division by `r`.
//! * [`verify_main2`]: when the part of the denominator coprime to `k` is also
//!   coprime to `k - 1`, the repetend's digit sum is a multiple of `k - 1`.
//!
//! For `k = 2` every congruence is modulo 1 and holds trivially; reports flag
//! such cases as `degenerate`.

mod fuzz;
mod magic;

pub use fuzz::{fuzz_main1, fuzz_main2, FuzzSummary};
pub use magic::{solve_missing_digit, MissingDigit};

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{gcd_u64, Natural, Rational};
use crate::digroot::{digit_sum_of_digits, digital_root, tf_digit_sum, tf_digital_root};
use crate::error::{Error, Result};
use crate::modring::orbit_of;
use crate::radix::{classify, from_digits, split_denominator, to_repeating, Radix};

fn modulus_of(k: Radix) -> u64 {
    k.max_digit()
}

/// Orbit label of `x` in `Z_m`; `Z_1` has the single label 1.
fn orbit_label(m: u64, x: u64) -> u64 {
    if m == 1 {
        1
    } else {
        orbit_of(m, x % m)
    }
}

fn pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    Natural::from(base)
        .modpow(&Natural::from(exp), &Natural::from(m))
        .to_u64()
        .expect("below modulus")
}

fn natural_mod(n: &Natural, m: u64) -> u64 {
    (n % m).to_u64().expect("below modulus")
}

fn require_terminating(q: &Rational, k: Radix) -> Result<()> {
    if classify(q, k).is_terminating() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "{q} is a repeating fraction in base {k}: its denominator has a prime factor not dividing {k}"
        )))
    }
}

fn require_proper_divisor(r: u64, k: Radix) -> Result<()> {
    if r < 2 || r >= k.get() || k.get() % r != 0 {
        return Err(Error::precondition(format!(
            "r = {r} is not a proper divisor of base {k} (need 2 <= r < k and r | k)"
        )));
    }
    Ok(())
}

/// Checks that the terminating digit sum and digital root of `q` agree
/// modulo `k - 1`.
pub fn verify_lemma_dr(q: &Rational, k: Radix) -> Result<bool> {
    require_terminating(q, k)?;
    let m = modulus_of(k);
    let sum = tf_digit_sum(q, k)?;
    let root = tf_digital_root(q, k)?.root;
    Ok(natural_mod(&sum, m) == root % m)
}

/// One term `q / r^j` of the progression checked by [`verify_main1`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Main1Term {
    pub j: u64,
    pub value: Rational,
    pub root: u64,
    pub orbit: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Main1Report {
    pub base: Radix,
    pub q: Rational,
    pub r: u64,
    pub terms: Vec<Main1Term>,
    pub orbit_delta: u64,
    pub congruence_ok: bool,
    pub pass: bool,
    pub witness: Option<u64>,
    pub degenerate: bool,
}

impl Main1Report {
    /// Recomputes the verdict from the stored terms.
    pub fn is_consistent(&self) -> bool {
        let m = modulus_of(self.base);
        let Some(first) = self.terms.first() else {
            return false;
        };
        let labels_ok = self.terms.iter().all(|t| t.orbit == self.orbit_delta);
        let congruence = self
            .terms
            .iter()
            .all(|t| pow_mod(self.r, t.j, m) * (t.root % m) % m == first.root % m);
        self.orbit_delta == orbit_label(m, first.root)
            && self.congruence_ok == congruence
            && self.pass == (labels_ok && congruence)
            && self.witness.is_some() != self.pass
    }
}

/// Follows `q, q/r, ..., q/r^terms` and checks that every digital root lies in
/// the orbit of the first one, and that `r^j * R_j = R_0 (mod k - 1)`.
pub fn verify_main1(q: &Rational, r: u64, k: Radix, terms: u64) -> Result<Main1Report> {
    require_proper_divisor(r, k)?;
    if terms == 0 {
        return Err(Error::precondition("need at least one division (terms >= 1)"));
    }
    if q.is_zero() {
        return Err(Error::precondition("q must be positive"));
    }
    require_terminating(q, k)?;

    let m = modulus_of(k);
    let divisor = Natural::from(r);
    let mut value = q.clone();
    let mut out = Vec::with_capacity(terms as usize + 1);
    for j in 0..=terms {
        if j > 0 {
            value = &value / &divisor;
        }
        let root = tf_digital_root(&value, k)?.root;
        out.push(Main1Term {
            j,
            value: value.clone(),
            root,
            orbit: orbit_label(m, root),
        });
    }

    let r0 = out[0].root % m;
    let orbit_delta = out[0].orbit;
    let mut witness = None;
    let mut congruence_ok = true;
    for t in &out {
        let label_ok = t.orbit == orbit_delta;
        let cong = pow_mod(r, t.j, m) * (t.root % m) % m == r0;
        congruence_ok &= cong;
        if witness.is_none() && !(label_ok && cong) {
            witness = Some(t.j);
        }
    }
    Ok(Main1Report {
        base: k,
        q: q.clone(),
        r,
        terms: out,
        orbit_delta,
        congruence_ok,
        pass: witness.is_none(),
        witness,
        degenerate: m == 1,
    })
}

/// If the digital root of `q` is a multiple of `k - 1`, so is that of `q / r`.
pub fn verify_cor1(q: &Rational, r: u64, k: Radix) -> Result<bool> {
    require_proper_divisor(r, k)?;
    if q.is_zero() {
        return Err(Error::precondition("q must be positive"));
    }
    require_terminating(q, k)?;
    let m = modulus_of(k);
    let root = tf_digital_root(q, k)?.root;
    if root % m != 0 {
        return Err(Error::precondition(format!(
            "digital root {root} of {q} is not a multiple of {m}"
        )));
    }
    let divided = q / &Natural::from(r);
    Ok(tf_digital_root(&divided, k)?.root % m == 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Main2Report {
    pub base: Radix,
    pub n: u64,
    pub s: u64,
    /// Largest divisor of `s` built from primes of `k`.
    pub smooth_part: u64,
    /// `s / smooth_part`, coprime to `k`.
    pub p_part: u64,
    pub preconditions_ok: bool,
    pub reason: Option<String>,
    pub rho0: u64,
    pub period: u64,
    pub repetend: Vec<u64>,
    pub repetend_digit_sum: u64,
    pub repetend_root: u64,
    /// `(k^T - 1) * k^rho0 * n / s` when it is an integer.
    #[serde(serialize_with = "serialize_opt_natural")]
    pub t_doubleprime: Option<Natural>,
    pub t_doubleprime_divisible: bool,
    pub pass: bool,
    pub degenerate: bool,
}

fn serialize_opt_natural<S: serde::Serializer>(
    n: &Option<Natural>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match n {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

impl Main2Report {
    /// Recomputes the verdict from the stored fields.
    pub fn is_consistent(&self) -> bool {
        let m = modulus_of(self.base);
        let sum_ok = !self.repetend.is_empty()
            && self.repetend.iter().sum::<u64>() == self.repetend_digit_sum;
        let expected = self.preconditions_ok
            && sum_ok
            && self.repetend_root % m == 0
            && self.t_doubleprime_divisible;
        self.pass == expected
            && self.smooth_part * self.p_part == self.s
            && (!self.preconditions_ok || self.repetend.len() as u64 == self.period)
    }
}

/// Checks that the repetend of `n / s` in base `k` has digital root `k - 1`
/// whenever the part of `s` coprime to `k` is at least 2 and coprime to
/// `k - 1`. Inputs outside that hypothesis yield a failing report with a
/// reason rather than an error.
pub fn verify_main2(n: u64, s: u64, k: Radix) -> Result<Main2Report> {
    if n == 0 {
        return Err(Error::precondition("n must be at least 1"));
    }
    if s < 2 {
        return Err(Error::precondition("s must be at least 2"));
    }
    if gcd_u64(n, s) != 1 {
        return Err(Error::domain(format!("{n}/{s} is not an irreducible fraction")));
    }
    let m = modulus_of(k);
    let (rho0, smooth, p) = split_denominator(&Natural::from(s), k);
    let smooth = smooth.to_u64().expect("divides s");
    let p = p.to_u64().expect("divides s");
    let mut report = Main2Report {
        base: k,
        n,
        s,
        smooth_part: smooth,
        p_part: p,
        preconditions_ok: false,
        reason: None,
        rho0,
        period: 0,
        repetend: Vec::new(),
        repetend_digit_sum: 0,
        repetend_root: 0,
        t_doubleprime: None,
        t_doubleprime_divisible: false,
        pass: false,
        degenerate: m == 1,
    };
    if p < 2 {
        report.reason = Some(format!("{n}/{s} terminates in base {k}"));
        return Ok(report);
    }
    if gcd_u64(p, m) != 1 {
        report.reason = Some(format!("gcd(p = {p}, k - 1 = {m}) != 1"));
        return Ok(report);
    }
    report.preconditions_ok = true;

    let q = Rational::new(Natural::from(n), Natural::from(s))?;
    let repr = to_repeating(&q, k)?;
    let repetend = repr.repetend().to_vec();
    let period = repetend.len() as u64;
    let digit_sum = digit_sum_of_digits(&repetend, k)?;
    let root = digital_root(&from_digits(&repetend, k), k).root;

    let t2 = &q * &((k.pow(period) - 1u32) * k.pow(rho0));
    let t2 = t2.is_integer().then(|| t2.floor());
    let divisible = t2
        .as_ref()
        .is_some_and(|t| !t.is_zero() && t.is_multiple_of(&Natural::from(m)));

    report.period = period;
    report.repetend_digit_sum = digit_sum.to_u64().expect("short repetend");
    report.repetend_root = root;
    report.pass = natural_mod(&digit_sum, m) == 0 && root % m == 0 && root != 0 && divisible;
    report.t_doubleprime = t2;
    report.t_doubleprime_divisible = divisible;
    report.repetend = repetend;
    debug_assert!(report.rho0 == repr.frac_digits().len() as u64);
    debug_assert!(!report.repetend.is_empty());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: u64, b: u64) -> Rational {
        Rational::new(Natural::from(a), Natural::from(b)).unwrap()
    }

    fn k(b: u64) -> Radix {
        Radix::new(b).unwrap()
    }

    #[test]
    fn lemma_examples() {
        assert!(verify_lemma_dr(&q(1441, 20), k(10)).unwrap());
        assert!(verify_lemma_dr(&Rational::zero(), k(7)).unwrap());
        // [4.25]_6: digits 4+2+5 = 11, root 1, 11 = 1 (mod 5)
        assert_eq!(tf_digit_sum(&q(161, 36), k(6)).unwrap(), Natural::from(11u32));
        assert_eq!(tf_digital_root(&q(161, 36), k(6)).unwrap().root, 1);
        assert!(verify_lemma_dr(&q(161, 36), k(6)).unwrap());
        assert!(matches!(verify_lemma_dr(&q(1, 3), k(10)), Err(Error::Domain(_))));
    }

    #[test]
    fn main1_base_eight_progression() {
        let report = verify_main1(&Rational::from(21), 2, k(8), 4).unwrap();
        assert!(report.pass);
        assert!(report.is_consistent());
        assert_eq!(report.orbit_delta, 7);
        let values: Vec<_> = report.terms.iter().map(|t| t.value.clone()).collect();
        assert_eq!(values, vec![q(21, 1), q(21, 2), q(21, 4), q(21, 8), q(21, 16)]);
        assert!(report.terms.iter().all(|t| t.root == 7));
    }

    #[test]
    fn main1_decimal() {
        let report = verify_main1(&Rational::from(7205), 5, k(10), 3).unwrap();
        assert!(report.pass);
        assert_eq!(report.terms[0].root, 5);
        assert_eq!(report.terms[1].root, 1);
        assert!(report.terms.iter().all(|t| [1, 2, 4, 5, 7, 8].contains(&t.root)));
        assert_eq!(report.orbit_delta, 1);
    }

    #[test]
    fn main1_preconditions() {
        let nine = Rational::from(9);
        assert!(matches!(verify_main1(&nine, 3, k(10), 1), Err(Error::Precondition(_))));
        assert!(matches!(verify_main1(&nine, 10, k(10), 1), Err(Error::Precondition(_))));
        assert!(matches!(verify_main1(&nine, 1, k(10), 1), Err(Error::Precondition(_))));
        assert!(matches!(verify_main1(&nine, 2, k(10), 0), Err(Error::Precondition(_))));
        assert!(matches!(
            verify_main1(&Rational::zero(), 2, k(10), 1),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(verify_main1(&q(9, 7), 2, k(10), 1), Err(Error::Domain(_))));
    }

    #[test]
    fn corollary_examples() {
        assert!(verify_cor1(&Rational::from(21), 2, k(8)).unwrap());
        // 9/5 = 1.8, digits 1 + 8 = 9
        assert!(verify_cor1(&Rational::from(9), 5, k(10)).unwrap());
        assert!(verify_cor1(&Rational::from(18), 2, k(10)).unwrap());
        assert!(matches!(verify_cor1(&Rational::from(5), 2, k(10)), Err(Error::Precondition(_))));
        assert!(verify_cor1(&Rational::from(9), 3, k(10)).is_err());
    }

    #[test]
    fn main2_decimal_examples() {
        let cases: [(u64, &[u64]); 4] = [
            (7, &[2, 8, 5, 7, 1, 4]),
            (11, &[8, 1]),
            (13, &[6, 9, 2, 3, 0, 7]),
            (17, &[5, 2, 9, 4, 1, 1, 7, 6, 4, 7, 0, 5, 8, 8, 2, 3]),
        ];
        for (s, rep) in cases {
            let report = verify_main2(9, s, k(10)).unwrap();
            assert!(report.pass, "9/{s}");
            assert!(report.is_consistent());
            assert_eq!(report.repetend, rep);
            assert_eq!(report.repetend_root, 9);
        }
    }

    #[test]
    fn main2_base_eight() {
        for s in [5, 25] {
            let report = verify_main2(21, s, k(8)).unwrap();
            assert!(report.pass);
            assert_eq!(report.repetend_root, 7);
        }
    }

    #[test]
    fn main2_outside_hypothesis() {
        let report = verify_main2(1, 3, k(10)).unwrap();
        assert!(!report.preconditions_ok);
        assert!(!report.pass);
        assert!(report.reason.is_some());
        assert!(report.is_consistent());
        let report = verify_main2(1, 8, k(10)).unwrap();
        assert!(!report.preconditions_ok);
        assert!(matches!(verify_main2(3, 6, k(10)), Err(Error::Domain(_))));
        assert!(verify_main2(0, 7, k(10)).is_err());
        assert!(verify_main2(1, 1, k(10)).is_err());
    }

    #[test]
    fn main2_mixed_denominator() {
        // 1/28 = 0.03(571428)
        let report = verify_main2(1, 28, k(10)).unwrap();
        assert_eq!((report.smooth_part, report.p_part, report.rho0), (4, 7, 2));
        assert_eq!(report.repetend, vec![5, 7, 1, 4, 2, 8]);
        assert!(report.pass);
    }
}
