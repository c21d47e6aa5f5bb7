#![allow(dead_code)]

use std::collections::HashMap;
use std::process::Command;

/// Schoolbook long division of `n/d` in `base`, detecting the cycle by
/// remembering each remainder. Returns (integer digits, regular fractional
/// digits, repetend).
pub fn long_division(n: u64, d: u64, base: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let mut int = Vec::new();
    let mut whole = n / d;
    loop {
        int.push(whole % base);
        whole /= base;
        if whole == 0 {
            break;
        }
    }
    int.reverse();
    let mut rem = n % d;
    let mut seen = HashMap::new();
    let mut digits = Vec::new();
    while rem != 0 && !seen.contains_key(&rem) {
        seen.insert(rem, digits.len());
        let scaled = u128::from(rem) * u128::from(base);
        digits.push((scaled / u128::from(d)) as u64);
        rem = (scaled % u128::from(d)) as u64;
    }
    if rem == 0 {
        (int, digits, Vec::new())
    } else {
        let rep = digits.split_off(seen[&rem]);
        (int, digits, rep)
    }
}

/// One end-to-end invocation of the binary and what it must produce.
pub struct Golden {
    pub args: &'static [&'static str],
    pub code: i32,
    /// Substrings that must appear in stdout, in order.
    pub stdout: &'static [&'static str],
}

pub const GOLDENS: &[Golden] = &[
    Golden { args: &["classify", "161/36", "--base", "10"], code: 0, stdout: &["repeating"] },
    Golden { args: &["classify", "161/36", "--base", "6"], code: 0, stdout: &["terminating rho0=2"] },
    Golden { args: &["classify", "5", "--base", "7"], code: 0, stdout: &["terminating rho0=0"] },
    Golden { args: &["classify", "1/0", "--base", "7"], code: 2, stdout: &[] },
    Golden { args: &["convert", "[101011]_2", "--to", "3"], code: 0, stdout: &["[1121]_3\n"] },
    Golden { args: &["repr", "9/7", "--base", "10"], code: 0, stdout: &["[1.(285714)]_10\n"] },
    Golden { args: &["repr", "161/36", "--base", "6", "--infinite"], code: 0, stdout: &["[4.24(5)]_6\n"] },
    Golden { args: &["repr", "0", "--base", "10", "--infinite"], code: 2, stdout: &[] },
    Golden { args: &["digroot", "7205", "--base", "10"], code: 0, stdout: &["root 5\n", "persistence 2\n"] },
    Golden { args: &["digroot", "[2A7E]_16", "--base", "16"], code: 0, stdout: &["root 3\n", "persistence 2\n"] },
    Golden { args: &["digroot", "0", "--base", "9"], code: 0, stdout: &["root 0\n", "persistence 0\n"] },
    Golden { args: &["digroot", "1/7", "--base", "10"], code: 2, stdout: &[] },
    Golden {
        args: &["orbits", "--modulus", "9"],
        code: 0,
        stdout: &["Γ_1^9 = {1,2,4,5,7,8}\nΓ_3^9 = {3,6}\nΓ_9^9 = {0}\n"],
    },
    Golden { args: &["orbits", "--modulus", "2"], code: 0, stdout: &["Γ_1^2 = {1}\nΓ_2^2 = {0}\n"] },
    Golden {
        args: &["orbits", "--modulus", "6"],
        code: 0,
        stdout: &["Γ_1^6 = {1,5}\nΓ_2^6 = {2,4}\nΓ_3^6 = {3}\nΓ_6^6 = {0}\n"],
    },
    Golden { args: &["orbits", "--modulus", "1"], code: 2, stdout: &[] },
    Golden {
        args: &["verify", "main1", "--q", "21", "--r", "2", "--base", "8", "--terms", "5"],
        code: 0,
        stdout: &["[12.4]_8", "[5.2]_8", "[2.5]_8", "[1.24]_8", "PASS"],
    },
    Golden {
        args: &["verify", "main2", "--n", "9", "--s", "7", "--base", "10"],
        code: 0,
        stdout: &["repetend 285714", "PASS"],
    },
    Golden { args: &["verify", "main1", "--q", "9/7", "--r", "2", "--base", "10"], code: 2, stdout: &[] },
    Golden { args: &["verify", "main1", "--q", "21", "--r", "3", "--base", "10"], code: 2, stdout: &[] },
    Golden {
        args: &["fuzz", "main1", "--bases", "2..16", "--bound", "120", "--terms", "5"],
        code: 0,
        stdout: &["failed=0"],
    },
    Golden {
        args: &["fuzz", "main2", "--bases", "2..16", "--n-bound", "100", "--s-bound", "100"],
        code: 0,
        stdout: &["failed=0"],
    },
    Golden {
        args: &["fuzz", "main1", "--bases", "3..3", "--bound", "0", "--terms", "5"],
        code: 0,
        stdout: &["tested=0"],
    },
    Golden { args: &["magic", "2?99561", "--base", "10"], code: 0, stdout: &["4\n"] },
    Golden { args: &["magic", "?", "--base", "10"], code: 0, stdout: &["ambiguous: 0 or 9"] },
    Golden { args: &["magic", "1?", "--base", "10"], code: 0, stdout: &["8\n"] },
    Golden { args: &["magic", "1??", "--base", "10"], code: 2, stdout: &[] },
];

pub fn invoke(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_radixroot"))
        .args(args)
        .env_remove("RADIXROOT_WORKERS")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

/// Checks one golden; `Err` carries a description of the mismatch.
pub fn check_golden(g: &Golden) -> Result<(), String> {
    let (code, stdout, stderr) = invoke(g.args);
    if code != g.code {
        return Err(format!(
            "{:?}: exit {code}, expected {} (stderr: {stderr})",
            g.args, g.code
        ));
    }
    let mut rest = stdout.as_str();
    for want in g.stdout {
        match rest.find(want) {
            Some(i) => rest = &rest[i + want.len()..],
            None => return Err(format!("{:?}: stdout {stdout:?} lacks {want:?}", g.args)),
        }
    }
    if g.code == 2 && stderr.is_empty() {
        return Err(format!("{:?}: no diagnostic on stderr", g.args));
    }
    Ok(())
}
