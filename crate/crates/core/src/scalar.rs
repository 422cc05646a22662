//! Arbitrary-precision rational scalars.
//!
//! Every computation in this crate is exact; `ExactScalar` is the only
//! number type. `num_rational::BigRational` already maintains the
//! invariants we need (positive denominator, coprime numerator and
//! denominator), so the type is a re-export with parsing and formatting
//! helpers for the `"p/q"` wire format.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type ExactScalar = BigRational;

/// Integer as an exact scalar.
pub fn rat(n: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact fraction `p/q`. Panics on `q == 0`; for untrusted input use
/// [`parse_scalar`].
pub fn frac(p: i64, q: i64) -> ExactScalar {
    assert!(q != 0, "zero denominator");
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn is_positive(x: &ExactScalar) -> bool {
    x.is_positive()
}

/// Parses `"p"` or `"p/q"`. Rejects a zero denominator and any sign on
/// the denominator: the canonical external form keeps the sign on the
/// numerator.
pub fn parse_scalar(s: &str) -> Result<ExactScalar> {
    let bad = || Error::ScalarLiteral(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
        Some((num, den)) => {
            let p: BigInt = num.parse().map_err(|_| bad())?;
            if den.starts_with('+') || den.starts_with('-') {
                return Err(bad());
            }
            let q: BigInt = den.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Formats in the wire format: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(x: &ExactScalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
