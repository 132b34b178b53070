//! Exact rational scalars: parsing, canonical printing and tolerant comparison.
//!
//! Every matrix entry and edge weight in this crate is an arbitrary-precision
//! rational. Entry classification hinges on strict-vs-equal comparisons, so
//! nothing here ever goes through floating point: decimal tokens such as
//! `1.25` are parsed exactly (to `5/4`), and the optional measurement
//! tolerance is itself an exact rational.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Error raised while parsing a rational token.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RatParseError {
    #[error("empty token")]
    Empty,
    #[error("invalid rational token `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

fn parse_bigint(s: &str, original: &str) -> Result<BigInt, RatParseError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(RatParseError::Invalid(original.to_string()));
    }
    s.parse::<BigInt>()
        .map_err(|_| RatParseError::Invalid(original.to_string()))
}

/// Parses a rational token.
///
/// Accepted forms: integers (`7`, `-3`), fractions (`5/4`, `-1/3`), decimals
/// (`1.25`, `.5`) and scientific notation (`1e-9`, `2.5e3`). Fractions do not
/// take an exponent.
pub fn parse_rat(token: &str) -> Result<Rat, RatParseError> {
    let original = token;
    let token = token.trim();
    if token.is_empty() {
        return Err(RatParseError::Empty);
    }
    let (negative, rest) = match token.as_bytes()[0] {
        b'-' => (true, &token[1..]),
        b'+' => (false, &token[1..]),
        _ => (false, token),
    };
    if rest.is_empty() {
        return Err(RatParseError::Invalid(original.to_string()));
    }

    let value = if let Some((num, den)) = rest.split_once('/') {
        let num = parse_bigint(num, original)?;
        let den = parse_bigint(den, original)?;
        if den.is_zero() {
            return Err(RatParseError::ZeroDenominator(original.to_string()));
        }
        Rat::new(num, den)
    } else {
        // Decimal mantissa with an optional e-notation exponent.
        let (mantissa, exponent) = match rest.split_once(['e', 'E']) {
            Some((m, e)) => {
                let exp = e
                    .parse::<i32>()
                    .map_err(|_| RatParseError::Invalid(original.to_string()))?;
                (m, exp)
            }
            None => (rest, 0),
        };
        let (int_part, frac_part) = match mantissa.split_once('.') {
            Some((i, f)) => (i, f),
            None => (mantissa, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(RatParseError::Invalid(original.to_string()));
        }
        let digits = format!("{int_part}{frac_part}");
        let num = parse_bigint(&digits, original)?;
        let ten = BigInt::from(10);
        let mut value = Rat::new(num, ten.pow(frac_part.len() as u32));
        if exponent >= 0 {
            value *= Rat::from_integer(BigInt::from(10).pow(exponent as u32));
        } else {
            value /= Rat::from_integer(BigInt::from(10).pow(exponent.unsigned_abs()));
        }
        value
    };

    Ok(if negative { -value } else { value })
}

/// Canonical token for a rational: `p` when integral, reduced `p/q` otherwise.
pub fn format_rat(value: &Rat) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Comparison policy for matrix predicates.
///
/// In exact mode two values are equal only when they are identical rationals.
/// In tolerant mode (for measured data) `a` and `b` are considered equal when
/// `|a - b| <= eps`; the tolerance is an exact rational, so comparisons stay
/// deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerance {
    eps: Rat,
}

impl Tolerance {
    pub fn exact() -> Self {
        Tolerance { eps: Rat::zero() }
    }

    /// Absolute tolerance; `eps` must be nonnegative.
    pub fn absolute(eps: Rat) -> Self {
        assert!(!eps.is_negative(), "tolerance must be nonnegative");
        Tolerance { eps }
    }

    pub fn is_exact(&self) -> bool {
        self.eps.is_zero()
    }

    pub fn eps(&self) -> &Rat {
        &self.eps
    }

    /// `a = b` up to the tolerance.
    pub fn eq(&self, a: &Rat, b: &Rat) -> bool {
        (a - b).abs() <= self.eps
    }

    /// `a <= b` up to the tolerance.
    pub fn le(&self, a: &Rat, b: &Rat) -> bool {
        *a <= b + &self.eps
    }

    /// `a < b` by more than the tolerance.
    pub fn lt(&self, a: &Rat, b: &Rat) -> bool {
        !self.le(b, a)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::exact()
    }
}

impl fmt::Display for Tolerance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "exact")
        } else {
            write!(f, "eps={}", format_rat(&self.eps))
        }
    }
}

/// Convenience constructor for small rationals in tests and fixtures.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for integral rationals.
pub fn rat_int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}
