//! Exact arithmetic primitives shared by every module.
//!
//! All values in this crate are arbitrary-precision: fifth powers of
//! sequence terms overflow 64-bit integers already around index 12, so
//! nothing here ever touches machine floats or fixed-width arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Arbitrary-precision rational, always normalized (positive denominator,
/// numerator and denominator coprime).
pub type ExactRat = BigRational;

/// Shorthand constructor for small integer constants.
pub fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

/// Shorthand constructor for small rational constants.
pub fn rat(v: i64) -> ExactRat {
    ExactRat::from_integer(int(v))
}

/// Rational p/q from small constants. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> ExactRat {
    ExactRat::new(int(p), int(q))
}

/// Lifts an integer into the rationals.
pub fn to_rat(v: &ExactInt) -> ExactRat {
    ExactRat::from_integer(v.clone())
}

/// (-1)^k as an integer, valid for negative `k` as well.
pub fn neg_one_pow(k: i64) -> ExactInt {
    if k.rem_euclid(2) == 0 {
        ExactInt::one()
    } else {
        -ExactInt::one()
    }
}

/// (-1)^k lifted into the rationals.
pub fn neg_one_pow_rat(k: i64) -> ExactRat {
    ExactRat::from_integer(neg_one_pow(k))
}

/// (-1)^(a*b) without forming the product, so huge indices cannot overflow.
pub fn neg_one_pow_prod(a: i64, b: i64) -> ExactInt {
    if a.rem_euclid(2) == 1 && b.rem_euclid(2) == 1 {
        -ExactInt::one()
    } else {
        ExactInt::one()
    }
}

/// Integer power with the 0^0 = 1 convention that every telescoping
/// boundary term in this crate relies on.
pub fn int_pow(base: &ExactInt, exp: i64) -> ExactInt {
    let exp = u32::try_from(exp).expect("int_pow: exponent must be a small nonnegative integer");
    base.pow(exp)
}

/// Rational power for nonnegative exponents, 0^0 = 1.
pub fn rat_pow(base: &ExactRat, exp: i64) -> ExactRat {
    let exp = i32::try_from(exp).expect("rat_pow: exponent must be a small nonnegative integer");
    assert!(exp >= 0, "rat_pow: exponent must be nonnegative");
    if exp == 0 {
        ExactRat::one()
    } else {
        base.pow(exp)
    }
}

/// Fifth power, the workhorse of the degree-5 identities.
pub fn pow5(x: &ExactInt) -> ExactInt {
    x.pow(5u32)
}

/// Renders a rational as `"p"` when integral, `"p/q"` otherwise.
/// This is the wire syntax used by the CLI and the JSON reports.
pub fn format_rat(r: &ExactRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the `"p"` / `"p/q"` wire syntax back into a normalized rational.
pub fn parse_rat(s: &str) -> Result<ExactRat, ParseRatError> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let numer = BigInt::from_str(p.trim()).map_err(|_| ParseRatError::Malformed(s.to_string()))?;
    let denom = BigInt::from_str(q.trim()).map_err(|_| ParseRatError::Malformed(s.to_string()))?;
    if denom.is_zero() {
        return Err(ParseRatError::ZeroDenominator(s.to_string()));
    }
    Ok(ExactRat::new(numer, denom))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRatError {
    #[error("malformed rational {0:?}: expected \"p\" or \"p/q\" with integer p, q")]
    Malformed(String),
    #[error("rational {0:?} has zero denominator")]
    ZeroDenominator(String),
}

/// Absolute value of a rational.
pub fn rat_abs(r: &ExactRat) -> ExactRat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neg_one_pow_handles_negative_exponents() {
        assert_eq!(neg_one_pow(-1), int(-1));
        assert_eq!(neg_one_pow(-2), int(1));
        assert_eq!(neg_one_pow(0), int(1));
        assert_eq!(neg_one_pow(7), int(-1));
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(int_pow(&int(0), 0), int(1));
        assert_eq!(rat_pow(&rat(0), 0), rat(1));
        assert_eq!(int_pow(&int(-3), 3), int(-27));
    }

    #[test]
    fn format_parses_back() {
        for r in [ratio(13, 240), rat(-7), ratio(-3, 4), rat(0)] {
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
        assert_eq!(format_rat(&ratio(6, 4)), "3/2");
        assert_eq!(format_rat(&rat(5)), "5");
        assert_eq!(parse_rat("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rat(" -5 ").unwrap(), rat(-5));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(
            parse_rat("1/0"),
            Err(ParseRatError::ZeroDenominator(_))
        ));
        assert!(matches!(parse_rat("x/2"), Err(ParseRatError::Malformed(_))));
        assert!(matches!(parse_rat(""), Err(ParseRatError::Malformed(_))));
        assert!(matches!(
            parse_rat("1/2/3"),
            Err(ParseRatError::Malformed(_))
        ));
    }
}
