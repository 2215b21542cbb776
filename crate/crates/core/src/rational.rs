//! Exact rational scalars.
//!
//! All arithmetic in the crate runs over [`Rational`], an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator.

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {text:?}: {reason}")]
pub struct RationalParseError {
    pub text: String,
    pub reason: &'static str,
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `-?digits(/digits)?`.
///
/// Non-canonical spellings (`2/4`, `-0`, `3/1`, `1/-2`) are rejected, so that
/// a value has exactly one textual form.
pub fn parse_canonical(text: &str) -> Result<Rational, RationalParseError> {
    let value = parse_lenient(text)?;
    if value.to_string() != text {
        return Err(RationalParseError {
            text: text.to_string(),
            reason: "not in reduced canonical form",
        });
    }
    Ok(value)
}

/// Parses `-?digits(/digits)?` and reduces the fraction.
pub fn parse_lenient(text: &str) -> Result<Rational, RationalParseError> {
    let err = |reason| RationalParseError {
        text: text.to_string(),
        reason,
    };
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num_part, den_part) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num_part) {
        return Err(err("expected decimal digits"));
    }
    let mut numer: BigInt = num_part.parse().map_err(|_| err("bad numerator"))?;
    if neg {
        numer = -numer;
    }
    let denom: BigInt = match den_part {
        Some(d) if digits(d) => d.parse().map_err(|_| err("bad denominator"))?,
        Some(_) => return Err(err("expected decimal digits after '/'")),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

/// Splits a nonzero rational into its square class: returns `(k, r)` with
/// `value = k * r^2`, `k` a squarefree integer and `r > 0` rational.
///
/// Trial division is used; integers whose cofactor exceeds the search range
/// keep that cofactor unsplit, which still yields a valid (if not squarefree)
/// pair.
pub fn square_class(value: &Rational) -> (BigInt, Rational) {
    assert!(!value.is_zero(), "square_class of zero");
    let sign = if value.is_negative() { -1 } else { 1 };
    let n = (value.numer() * value.denom()).abs();
    let mut rest = n;
    let mut square_root = BigInt::one();
    let mut kernel = BigInt::one();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= rest && p <= limit {
        let mut count = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            count += 1;
        }
        for _ in 0..count / 2 {
            square_root *= &p;
        }
        if count % 2 == 1 {
            kernel *= &p;
        }
        p += 1;
    }
    let s = rest.sqrt();
    if &s * &s == rest {
        square_root *= s;
    } else {
        kernel *= rest;
    }
    let r = Rational::new(square_root, value.denom().abs());
    (kernel * sign, r)
}
