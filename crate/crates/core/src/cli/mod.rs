//! Command-line front end.
//!
//! [`run`] parses arguments, executes one command and returns what should go
//! to stdout and stderr together with the exit code: 0 on success or a
//! verified statement, 1 when a violation was found, 2 for usage, parse and
//! precondition errors. With `--json` stdout carries exactly one document of
//! the form `{"command", "inputs", "result", "pass"?}`.

mod args;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::Parser;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::Rational;
use crate::digroot::tf_digital_root;
use crate::error::{Error, Result};
use crate::modring::orbit_partition;
use crate::radix::{self, canonical, classify, to_repeating, value_of, ReprKind};
use crate::theorems::{
    fuzz_main1, fuzz_main2, solve_missing_digit, verify_cor1, verify_lemma_dr, verify_main1,
    verify_main2, FuzzSummary,
};
use crate::Radix;

pub use args::{BaseRange, Cli, Command, FuzzCommand, VerifyCommand};

/// Environment variable overriding the default fuzz worker count.
pub const WORKERS_ENV: &str = "RADIXROOT_WORKERS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(err: impl std::fmt::Display) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

/// A finished command before rendering.
struct Report {
    command: &'static str,
    inputs: Value,
    result: Value,
    pass: Option<bool>,
    text: String,
    /// Overrides the code implied by `pass`.
    code: Option<u8>,
}

impl Report {
    fn new(command: &'static str, inputs: Value, result: Value, text: String) -> Self {
        Self {
            command,
            inputs,
            result,
            pass: None,
            text,
            code: None,
        }
    }

    fn with_pass(mut self, pass: bool) -> Self {
        self.pass = Some(pass);
        self
    }

    fn render(self, json_mode: bool) -> Outcome {
        let code = self
            .code
            .unwrap_or(if self.pass == Some(false) { 1 } else { 0 });
        let stdout = if json_mode {
            let mut doc = json!({
                "command": self.command,
                "inputs": self.inputs,
                "result": self.result,
            });
            if let Some(pass) = self.pass {
                doc["pass"] = Value::Bool(pass);
            }
            format!("{doc}\n")
        } else {
            self.text
        };
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => report.render(cli.json),
        Err(e) => Outcome::error(e),
    }
}

/// A number literal: `a`, `a/b` or bracket notation. Bracket literals carry
/// their base, which serves as the default when no `--base` is given.
fn parse_literal(text: &str) -> Result<(Rational, Option<Radix>)> {
    if text.starts_with('[') {
        let repr = radix::parse(text)?;
        Ok((value_of(&repr), Some(repr.base())))
    } else {
        Ok((text.parse()?, None))
    }
}

fn radix_arg(explicit: Option<u64>, implied: Option<Radix>) -> Result<Radix> {
    match (explicit, implied) {
        (Some(k), _) => Radix::new(k),
        (None, Some(k)) => Ok(k),
        (None, None) => Err(Error::Usage("--base is required for this literal".into())),
    }
}

fn workers_arg(flag: Option<usize>) -> Result<usize> {
    if let Some(w) = flag {
        return if w == 0 {
            Err(Error::Usage("--workers must be at least 1".into()))
        } else {
            Ok(w)
        };
    }
    match std::env::var(WORKERS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(w) if w >= 1 => Ok(w),
            _ => Err(Error::Usage(format!("{WORKERS_ENV} must be a positive integer, got {v:?}"))),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, usize::from)),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Classify { literal, base } => {
            let (q, implied) = parse_literal(literal)?;
            let k = radix_arg(*base, implied)?;
            let c = classify(&q, k);
            let kind = match c.kind {
                ReprKind::Terminating => "terminating",
                ReprKind::Repeating => "repeating",
            };
            let text = format!("{kind} rho0={} period={}\n", c.rho0, c.period);
            Ok(Report::new(
                "classify",
                json!({"value": q, "base": k}),
                to_value(&c),
                text,
            ))
        }
        Command::Repr {
            literal,
            base,
            infinite,
        } => {
            let (q, implied) = parse_literal(literal)?;
            let k = radix_arg(*base, implied)?;
            render_repr("repr", &q, k, *infinite)
        }
        Command::Convert {
            literal,
            to,
            infinite,
        } => {
            let (q, _) = parse_literal(literal)?;
            render_repr("convert", &q, Radix::new(*to)?, *infinite)
        }
        Command::Digroot { literal, base } => {
            let (q, implied) = parse_literal(literal)?;
            let k = radix_arg(*base, implied)?;
            let r = tf_digital_root(&q, k)?;
            let text = format!(
                "root {}\npersistence {}\ntrajectory {}\n",
                r.root,
                r.persistence,
                if r.trajectory.is_empty() { "-".to_string() } else { join(&r.trajectory, " -> ") }
            );
            Ok(Report::new(
                "digroot",
                json!({"value": q, "base": k}),
                to_value(&r),
                text,
            ))
        }
        Command::Orbits { modulus } => {
            let p = orbit_partition(*modulus)?;
            let result: Vec<Value> = p
                .classes()
                .iter()
                .map(|(d, set)| json!({"divisor": d, "residues": set}))
                .collect();
            Ok(Report::new(
                "orbits",
                json!({"modulus": modulus}),
                json!({"modulus": modulus, "classes": result}),
                p.to_string(),
            ))
        }
        Command::Verify(v) => execute_verify(v),
        Command::Fuzz(f) => execute_fuzz(f),
        Command::Magic { pattern, base } => {
            let k = Radix::new(*base)?;
            let sol = solve_missing_digit(pattern, k)?;
            let text = match sol.digit() {
                Some(d) => format!("{}\n", radix_digit(d)),
                None => format!(
                    "ambiguous: {}\n",
                    join(sol.candidates.iter().map(|&d| radix_digit(d)), " or ")
                ),
            };
            Ok(Report::new(
                "magic",
                json!({"pattern": pattern, "base": k}),
                to_value(&sol),
                text,
            ))
        }
    }
}

fn radix_digit(d: u64) -> char {
    char::from_digit(d as u32, 36)
        .expect("pattern bases stop at 36")
        .to_ascii_uppercase()
}

fn render_repr(command: &'static str, q: &Rational, k: Radix, infinite: bool) -> Result<Report> {
    let repr = if infinite {
        to_repeating(q, k)?
    } else {
        canonical(q, k)
    };
    let text = format!("{repr}\n");
    Ok(Report::new(
        command,
        json!({"value": q, "base": k, "infinite": infinite}),
        json!({
            "text": repr.to_string(),
            "int_digits": repr.int_digits(),
            "frac_digits": repr.frac_digits(),
            "repetend": repr.repetend(),
        }),
        text,
    ))
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn execute_verify(v: &VerifyCommand) -> Result<Report> {
    match v {
        VerifyCommand::Main1 { q, r, base, terms } => {
            let (value, _) = parse_literal(q)?;
            let k = Radix::new(*base)?;
            let report = verify_main1(&value, *r, k, *terms)?;
            let mut text = String::new();
            for t in &report.terms {
                let repr = canonical(&t.value, k);
                let _ = writeln!(
                    text,
                    "j={} q={} {} root={} orbit={}",
                    t.j, t.value, repr, t.root, t.orbit
                );
            }
            let _ = writeln!(
                text,
                "orbit {} congruence {} {}",
                report.orbit_delta,
                if report.congruence_ok { "ok" } else { "violated" },
                verdict(report.pass)
            );
            if let Some(j) = report.witness {
                let _ = writeln!(text, "witness j={j}");
            }
            let pass = report.pass;
            Ok(Report::new(
                "verify main1",
                json!({"q": value, "r": r, "base": k, "terms": terms}),
                to_value(&report),
                text,
            )
            .with_pass(pass))
        }
        VerifyCommand::Main2 { n, s, base } => {
            let k = Radix::new(*base)?;
            let report = verify_main2(*n, *s, k)?;
            let mut text = String::new();
            if let Some(reason) = &report.reason {
                let _ = writeln!(text, "hypothesis not met: {reason}");
            } else {
                let _ = writeln!(
                    text,
                    "s = {} * {} rho0={} period={}",
                    report.smooth_part, report.p_part, report.rho0, report.period
                );
                let _ = writeln!(
                    text,
                    "repetend {} digit sum {} root {}",
                    digit_string(&report.repetend, k),
                    report.repetend_digit_sum,
                    report.repetend_root
                );
            }
            let _ = writeln!(text, "{}", verdict(report.pass));
            let pass = report.pass;
            let mut out = Report::new(
                "verify main2",
                json!({"n": n, "s": s, "base": k}),
                to_value(&report),
                text,
            )
            .with_pass(pass);
            if !report.preconditions_ok {
                out.code = Some(2);
            }
            Ok(out)
        }
        VerifyCommand::Cor1 { q, r, base } => {
            let (value, _) = parse_literal(q)?;
            let k = Radix::new(*base)?;
            let pass = verify_cor1(&value, *r, k)?;
            let root = tf_digital_root(&(&value / &crate::Natural::from(*r)), k)?.root;
            Ok(Report::new(
                "verify cor1",
                json!({"q": value, "r": r, "base": k}),
                json!({"divided_root": root}),
                format!("root of q/r = {root} {}\n", verdict(pass)),
            )
            .with_pass(pass))
        }
        VerifyCommand::Lemma31 { q, base } => {
            let (value, implied) = parse_literal(q)?;
            let k = radix_arg(*base, implied)?;
            let pass = verify_lemma_dr(&value, k)?;
            let sum = crate::digroot::tf_digit_sum(&value, k)?;
            let root = tf_digital_root(&value, k)?.root;
            Ok(Report::new(
                "verify lemma31",
                json!({"q": value, "base": k}),
                json!({"digit_sum": sum.to_string(), "root": root}),
                format!("digit sum {sum} root {root} {}\n", verdict(pass)),
            )
            .with_pass(pass))
        }
    }
}

fn digit_string(digits: &[u64], k: Radix) -> String {
    if k.get() <= 36 {
        digits.iter().map(|&d| radix_digit(d)).collect()
    } else {
        join(digits, ",")
    }
}

fn summary_text<R>(s: &FuzzSummary<R>, describe: impl Fn(&R) -> String) -> String {
    let mut text = format!(
        "tested={} passed={} failed={} skipped={} degenerate={}\n",
        s.tested, s.passed, s.failed, s.skipped, s.degenerate
    );
    for f in &s.failures {
        let _ = writeln!(text, "failure {}", describe(f));
    }
    text
}

fn execute_fuzz(f: &FuzzCommand) -> Result<Report> {
    match f {
        FuzzCommand::Main1 {
            bases,
            bound,
            terms,
            workers,
        } => {
            let w = workers_arg(workers.workers)?;
            let s = fuzz_main1(bases.range(), *bound, *terms, w)?;
            let text = summary_text(&s, |r| {
                format!("k={} r={} q={} j={:?}", r.base, r.r, r.q, r.witness)
            });
            let pass = s.failed == 0;
            Ok(Report::new(
                "fuzz main1",
                json!({"bases": bases.to_string(), "bound": bound, "terms": terms, "workers": w}),
                to_value(&s),
                text,
            )
            .with_pass(pass))
        }
        FuzzCommand::Main2 {
            bases,
            n_bound,
            s_bound,
            workers,
        } => {
            let w = workers_arg(workers.workers)?;
            let s = fuzz_main2(bases.range(), *n_bound, *s_bound, w)?;
            let text = summary_text(&s, |r| {
                format!("k={} n={} s={} repetend={:?}", r.base, r.n, r.s, r.repetend)
            });
            let pass = s.failed == 0;
            Ok(Report::new(
                "fuzz main2",
                json!({"bases": bases.to_string(), "n_bound": n_bound, "s_bound": s_bound, "workers": w}),
                to_value(&s),
                text,
            )
            .with_pass(pass))
        }
    }
}
