//! Exhaustive enumeration over bounded input ranges.
//!
//! Tuples are generated in lexicographic order, split into contiguous chunks
//! for the worker threads, and merged back in order, so reports do not depend
//! on the worker count.

use std::ops::RangeInclusive;
use std::thread;

use num_traits::One;
use serde::Serialize;

use super::{verify_main1, verify_main2, Main1Report, Main2Report};
use crate::arith::{divisors_u64, gcd_u64, Natural, Rational};
use crate::error::{Error, Result};
use crate::radix::{split_denominator, Radix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzSummary<R> {
    pub tested: u64,
    pub passed: u64,
    pub failed: u64,
    /// Tuples outside the hypothesis of the checked statement.
    pub skipped: u64,
    /// Tested tuples with `k = 2`, where every congruence is modulo 1.
    pub degenerate: u64,
    pub failures: Vec<R>,
}

impl<R> Default for FuzzSummary<R> {
    fn default() -> Self {
        Self {
            tested: 0,
            passed: 0,
            failed: 0,
            skipped: 0,
            degenerate: 0,
            failures: Vec::new(),
        }
    }
}

fn check_bases(bases: &RangeInclusive<u64>) -> Result<()> {
    if *bases.start() < 2 && !bases.is_empty() {
        return Err(Error::domain("bases start at 2"));
    }
    Ok(())
}

fn check_workers(workers: usize) -> Result<()> {
    if workers == 0 {
        return Err(Error::domain("worker count must be at least 1"));
    }
    Ok(())
}

/// Runs `check` over `tasks` on up to `workers` threads, preserving order.
fn run_chunked<T, R, F>(tasks: &[T], workers: usize, check: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync,
{
    if workers <= 1 || tasks.len() < 2 {
        return tasks.iter().map(&check).collect();
    }
    let chunk = tasks.len().div_ceil(workers);
    let check = &check;
    thread::scope(|scope| {
        let handles: Vec<_> = tasks
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(check).collect::<Result<Vec<R>>>()))
            .collect();
        let mut out = Vec::with_capacity(tasks.len());
        for handle in handles {
            out.extend(handle.join().expect("fuzz worker panicked")?);
        }
        Ok(out)
    })
}

fn is_smooth(b: u64, k: Radix) -> bool {
    split_denominator(&Natural::from(b), k).2.is_one()
}

/// Checks orbit invariance for every base in `bases`, every proper divisor
/// `r` of the base, and every reduced `a/b` with `1 <= a <= bound` and
/// `k`-smooth `b <= bound`, following `terms` divisions by `r`.
pub fn fuzz_main1(
    bases: RangeInclusive<u64>,
    bound: u64,
    terms: u64,
    workers: usize,
) -> Result<FuzzSummary<Main1Report>> {
    check_bases(&bases)?;
    check_workers(workers)?;
    if terms == 0 {
        return Err(Error::domain("terms must be at least 1"));
    }
    let mut tasks = Vec::new();
    for k in bases {
        let radix = Radix::new(k)?;
        let smooth: Vec<u64> = (1..=bound).filter(|&b| is_smooth(b, radix)).collect();
        for r in divisors_u64(k)?.into_iter().filter(|&r| r >= 2 && r < k) {
            for a in 1..=bound {
                for &b in smooth.iter().filter(|&&b| gcd_u64(a, b) == 1) {
                    tasks.push((radix, r, a, b));
                }
            }
        }
    }
    let reports = run_chunked(&tasks, workers, |&(k, r, a, b)| {
        let q = Rational::new(Natural::from(a), Natural::from(b))?;
        verify_main1(&q, r, k, terms)
    })?;

    let mut summary = FuzzSummary::default();
    for report in reports {
        summary.tested += 1;
        summary.degenerate += u64::from(report.degenerate);
        if report.pass {
            summary.passed += 1;
        } else {
            summary.failed += 1;
            summary.failures.push(report);
        }
    }
    Ok(summary)
}

/// Checks the repetend law for every base in `bases` and every reduced `n/s`
/// with `1 <= n <= n_bound` and `2 <= s <= s_bound`. Fractions whose
/// `k`-coprime part is 1 or shares a factor with `k - 1` count as skipped.
pub fn fuzz_main2(
    bases: RangeInclusive<u64>,
    n_bound: u64,
    s_bound: u64,
    workers: usize,
) -> Result<FuzzSummary<Main2Report>> {
    check_bases(&bases)?;
    check_workers(workers)?;
    let mut tasks = Vec::new();
    for k in bases {
        let radix = Radix::new(k)?;
        for n in 1..=n_bound {
            for s in (2..=s_bound).filter(|&s| gcd_u64(n, s) == 1) {
                tasks.push((radix, n, s));
            }
        }
    }
    let reports = run_chunked(&tasks, workers, |&(k, n, s)| verify_main2(n, s, k))?;

    let mut summary = FuzzSummary::default();
    for report in reports {
        if !report.preconditions_ok {
            summary.skipped += 1;
            continue;
        }
        summary.tested += 1;
        summary.degenerate += u64::from(report.degenerate);
        if report.pass {
            summary.passed += 1;
        } else {
            summary.failed += 1;
            summary.failures.push(report);
        }
    }
    Ok(summary)
}
