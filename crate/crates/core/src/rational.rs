//! Exact rational scalars shared by every module.
//!
//! Everything in this crate computes over arbitrary-precision rationals in
//! canonical form (reduced, positive denominator); there is no floating
//! point anywhere.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Rational with the given integer value.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Exact binomial coefficient C(n, k); zero for k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Renders a rational as `p` when integral, otherwise `p/q` with q > 0.
///
/// This is the wire format used by every exporter: no whitespace, decimal
/// digits, denominator only when it carries information.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q`. A zero denominator is rejected rather than
/// panicking inside the bignum layer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = numer.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match denom {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(20, 10), BigInt::from(184_756));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(4), BigInt::from(24));
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }

    #[test]
    fn wire_format_is_canonical() {
        assert_eq!(format_rational(&rat(7)), "7");
        assert_eq!(format_rational(&rat(-3)), "-3");
        assert_eq!(format_rational(&(rat(1) / rat(2))), "1/2");
        // sign normalizes onto the numerator
        assert_eq!(format_rational(&(rat(3) / rat(-6))), "-1/2");
    }

    #[test]
    fn parse_accepts_both_forms() {
        assert_eq!(parse_rational("5").unwrap(), rat(5));
        assert_eq!(parse_rational("-5").unwrap(), rat(-5));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3) / rat(2));
        assert_eq!(parse_rational("1/-2").unwrap(), rat(-1) / rat(2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
    }
}
