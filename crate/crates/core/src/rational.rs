//! Exact rational helpers on top of `num_rational::BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn from_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `"p/q"` or `"p"` with optional leading sign on the numerator.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let err = |reason: &str| Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let s = input.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    if num.is_empty() || den.is_empty() {
        return Err(err("empty numerator or denominator"));
    }
    if den.starts_with(['-', '+']) {
        return Err(err("sign belongs on the numerator"));
    }
    let n: BigInt = num
        .parse()
        .map_err(|_| err("numerator is not an integer"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| err("denominator is not an integer"))?;
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Canonical rendering: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn render(r: &Rational) -> String {
    r.to_string()
}

/// Decimal rendering truncated toward zero with exactly `digits` fractional digits.
pub fn render_decimal(r: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (r.numer().abs() * &scale).div_floor(r.denom());
    let (int_part, frac_part) = scaled.div_rem(&scale);
    let negative = r.is_negative() && !scaled.is_zero();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 {
        out.push('.');
        out.push_str(&format!(
            "{:0>width$}",
            frac_part.to_string(),
            width = digits
        ));
    }
    out
}
