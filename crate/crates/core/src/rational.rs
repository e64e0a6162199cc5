//! Exact rational numbers and their textual forms.
//!
//! Payoffs and probabilities are arbitrary-precision rationals kept in lowest
//! terms with a positive denominator, so equality is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

/// Shorthand constructor, mostly for tests and fixtures.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn ratio_of(numer: usize, denom: usize) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses an integer (`-3`), a decimal (`2.75`, `.5`) or a fraction (`3/5`)
/// into an exact rational. Decimals go through a power-of-ten denominator.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty numeric string".into());
    }
    if let Some((num, den)) = text.split_once('/') {
        let num = parse_integer(num.trim())
            .ok_or_else(|| format!("invalid fraction numerator in {text:?}"))?;
        let den = parse_integer(den.trim())
            .ok_or_else(|| format!("invalid fraction denominator in {text:?}"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in {text:?}"));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let (negative, whole) = split_sign(whole);
        let digits_ok = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if (whole.is_empty() && frac.is_empty()) || !digits_ok(whole) || !digits_ok(frac) {
            return Err(format!("invalid decimal {text:?}"));
        }
        let digits = format!("{whole}{frac}");
        let mut numer: BigInt = digits
            .parse()
            .map_err(|_| format!("invalid decimal {text:?}"))?;
        if negative {
            numer = -numer;
        }
        let denom = num_traits::pow(BigInt::from(10u8), frac.len());
        return Ok(Rational::new(numer, denom));
    }
    parse_integer(text)
        .map(Rational::from_integer)
        .ok_or_else(|| format!("invalid number {text:?}"))
}

fn split_sign(text: &str) -> (bool, &str) {
    match text.as_bytes().first() {
        Some(b'-') => (true, &text[1..]),
        Some(b'+') => (false, &text[1..]),
        _ => (false, text),
    }
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let (negative, digits) = split_sign(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let value: BigInt = digits.parse().ok()?;
    Some(if negative { -value } else { value })
}
