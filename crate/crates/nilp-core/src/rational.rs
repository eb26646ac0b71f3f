//! The ground field: arbitrary-precision rationals.
//!
//! Everything downstream computes over ℚ, so results carry no tolerance:
//! equality is equality. `num_rational::BigRational` already keeps values
//! reduced with a positive denominator, which is exactly the invariant we
//! need; this module adds construction shorthands and the strict `"p/q"`
//! string format used by the interchange files.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics if `d == 0`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
}

/// Parse the interchange coefficient format: an optionally signed decimal
/// integer, or two of them separated by `/`. No whitespace, no floats.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let parse_int = |part: &str| -> Result<BigInt, RationalParseError> {
        let digits = part.strip_prefix('-').unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(RationalParseError::Malformed(s.to_owned()));
        }
        part.parse::<BigInt>()
            .map_err(|_| RationalParseError::Malformed(s.to_owned()))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(RationalParseError::ZeroDenominator(s.to_owned()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Format a rational as `"p"` or `"p/q"`, the inverse of [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rough size of a rational, used for pivot selection: small pivots keep
/// coefficient growth down during exact elimination.
pub fn bit_size(r: &Rational) -> u64 {
    r.numer().abs().bits() + r.denom().bits()
}
