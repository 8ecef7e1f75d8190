//! Exact rational scalars.
//!
//! [`Rational`] is `num_rational::BigRational`: always in lowest terms with a
//! positive denominator. This module adds the literal syntax used by the
//! file formats (`"p/q"`, `"-3"`, and `"inf"` for points).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ParseError;

pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` in lowest terms. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a decimal-free rational literal: `"7"`, `"-7"`, `"22/7"`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    let bad = || ParseError::Rational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical literal: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// `r^e` for a (possibly negative) integer exponent. Panics on `0^negative`.
pub fn pow(r: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(r.clone(), e as usize)
    } else {
        num_traits::pow(r.recip(), e.unsigned_abs() as usize)
    }
}

/// Binomial coefficient `C(n, k)` for `n ≥ 0`.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

/// Generalized binomial coefficient `C(e, k)` for any integer `e`.
pub fn binomial_signed(e: i64, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * int(e - i as i64) / int(i as i64 + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_literals() {
        assert_eq!(parse_rational("22/7").unwrap(), frac(22, 7));
        assert_eq!(parse_rational("-4/6").unwrap(), frac(-2, 3));
        assert_eq!(parse_rational("5").unwrap(), int(5));
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn formats_lowest_terms() {
        assert_eq!(format_rational(&frac(10, -4)), "-5/2");
        assert_eq!(format_rational(&int(3)), "3");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial_signed(-2, 3), int(-4));
        assert_eq!(binomial_signed(3, 5), int(0));
    }
}
