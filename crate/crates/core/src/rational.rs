//! The exact rational scalar used throughout the crate, with parsing,
//! formatting, and controlled conversion to `f64`.
//!
//! Backed by `num_rational::BigRational`, which keeps values in lowest
//! terms with a positive denominator — the invariants every module here
//! relies on.

use num_bigint::{BigInt, Sign};
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The rational `n/1`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses a rational from `p/q`, an integer, or a finite decimal.
///
/// The grammar is: optional sign, digits, then optionally either
/// `/digits` or `.digits`. Decimals convert exactly (`0.25` is `1/4`);
/// no floating point is involved.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let bad = || ParseRationalError::Invalid(s.to_string());
    let (sign, body) = match s.as_bytes()[0] {
        b'+' => (1, &s[1..]),
        b'-' => (-1, &s[1..]),
        _ => (1, s),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let all_digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let (numer, denom) = if let Some((n, d)) = body.split_once('/') {
        if !all_digits(n) || !all_digits(d) {
            return Err(bad());
        }
        let denom: BigInt = d.parse().map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(s.to_string()));
        }
        (n.parse::<BigInt>().map_err(|_| bad())?, denom)
    } else if let Some((int_part, frac_part)) = body.split_once('.') {
        if !all_digits(int_part) || !all_digits(frac_part) {
            return Err(bad());
        }
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let numer = int_part.parse::<BigInt>().map_err(|_| bad())? * &scale
            + frac_part.parse::<BigInt>().map_err(|_| bad())?;
        (numer, scale)
    } else {
        if !all_digits(body) {
            return Err(bad());
        }
        (body.parse::<BigInt>().map_err(|_| bad())?, BigInt::from(1))
    };
    Ok(Rational::new(BigInt::from(sign) * numer, denom))
}

/// Renders a rational as `num/den` in lowest terms, or just `num` when
/// the denominator is 1. This is the wire format used in all JSON/CSV
/// output.
pub fn rat_string(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Converts to `f64` without overflowing on huge numerators or
/// denominators: the quotient is formed in big-integer arithmetic with
/// 128 guard bits, then scaled back.
pub fn rat_to_f64(r: &Rational) -> f64 {
    if r.numer().is_zero() {
        return 0.0;
    }
    let shifted: BigInt = (r.numer() << 128u32) / r.denom();
    let approx = shifted.to_f64().unwrap_or_else(|| {
        if shifted.sign() == Sign::Minus {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    });
    approx * 2f64.powi(-128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("+7").unwrap(), rat_int(7));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("10/4").unwrap(), rat(5, 2));
    }

    #[test]
    fn rejects_malformed_literals() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("--3").is_err());
    }

    #[test]
    fn formats_in_lowest_terms() {
        assert_eq!(rat_string(&rat(6, 4)), "3/2");
        assert_eq!(rat_string(&rat(-4, 2)), "-2");
        assert_eq!(rat_string(&rat(0, 5)), "0");
    }

    #[test]
    fn renormalizing_is_a_noop() {
        for (n, d) in [(6i64, 4i64), (-10, 5), (0, 3), (7, -3)] {
            let r = rat(n, d);
            let renorm = Rational::new(r.numer().clone(), r.denom().clone());
            assert_eq!(renorm, r);
            assert!(r.denom() > &BigInt::from(0));
        }
    }

    #[test]
    fn f64_conversion_survives_huge_components() {
        // value ~ 1.5 but numerator and denominator each overflow f64
        let big = BigInt::from(2u32).pow(8000);
        let r = Rational::new(&big * 3, &big * 2);
        assert!((rat_to_f64(&r) - 1.5).abs() < 1e-12);
        assert_eq!(rat_to_f64(&Rational::zero()), 0.0);
        let tiny = Rational::new(BigInt::from(1), big);
        assert_eq!(rat_to_f64(&tiny), 0.0); // underflows cleanly
    }
}
