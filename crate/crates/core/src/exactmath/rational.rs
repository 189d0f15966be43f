//! Helpers for arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Parse an exact rational from `p/q` or `p` (decimal integers).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))?;
    let denom: BigInt = match den_str {
        Some(d) => d
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(numer, denom))
}

/// Exact integer power, with negative exponents inverting the base.
pub fn rational_pow(base: &BigRational, exp: i64) -> Result<BigRational> {
    if exp >= 0 {
        let mut acc = BigRational::one();
        for _ in 0..exp {
            acc *= base;
        }
        return Ok(acc);
    }
    if base.is_zero() {
        return Err(Error::Degeneracy(format!(
            "zero raised to negative power {exp}"
        )));
    }
    let inv = base.recip();
    let mut acc = BigRational::one();
    for _ in 0..(-exp) {
        acc *= &inv;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_forms() {
        assert_eq!(parse_rational("3").unwrap().to_string(), "3");
        assert_eq!(parse_rational("-4/6").unwrap().to_string(), "-2/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn negative_powers_invert() {
        let half = parse_rational("1/2").unwrap();
        assert_eq!(rational_pow(&half, -2).unwrap().to_string(), "4");
        assert!(rational_pow(&BigRational::zero(), -1).is_err());
    }
}
