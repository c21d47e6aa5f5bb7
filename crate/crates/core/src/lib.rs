//! Exact base-`k` arithmetic for digital roots.
//!
//! * [`arith`]: natural numbers, reduced rationals, factorization, divisors.
//! * [`modring`]: `Z_n`, its units, and the orbit partition under the units.
//! * [`radix`]: terminating and repeating expansions and bracket notation.
//! * [`digroot`]: digit sums, additive persistence, digital roots.
//! * [`theorems`]: verifiers and exhaustive checkers for the digital-root
//!   invariance results, plus the missing-digit puzzle.
//! * [`cli`]: the `radixroot` command-line front end.
//!
//! ```
//! use radixroot::radix::{parse, to_repeating, Radix};
//! use radixroot::Rational;
//!
//! let seventh: Rational = "9/7".parse().unwrap();
//! let r = to_repeating(&seventh, Radix::new(10).unwrap()).unwrap();
//! assert_eq!(r.to_string(), "[1.(285714)]_10");
//! assert_eq!(parse("[1.(285714)]_10").unwrap(), r);
//! ```

pub mod arith;
pub mod cli;
pub mod digroot;
pub mod error;
pub mod modring;
pub mod radix;
pub mod theorems;

pub use arith::{Natural, Rational};
pub use error::{Error, Result};
pub use radix::{PositionalRepr, Radix};
