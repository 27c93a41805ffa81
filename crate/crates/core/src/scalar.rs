//! Exact rational scalars.
//!
//! Every coefficient in the toolkit is a [`Scalar`], an arbitrary-precision
//! rational kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn half() -> Scalar {
    frac(1, 2)
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`. Surrounding whitespace is ignored.
pub fn parse(s: &str) -> Result<Scalar> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty scalar literal".to_string()));
    }
    let parsed = if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| Error::Parse(format!("bad numerator in {t:?}")))?;
        let q = BigInt::from_str(q.trim()).map_err(|_| Error::Parse(format!("bad denominator in {t:?}")))?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {t:?}")));
        }
        BigRational::new(p, q)
    } else {
        let p = BigInt::from_str(t).map_err(|_| Error::Parse(format!("bad scalar {t:?}")))?;
        BigRational::from_integer(p)
    };
    Ok(parsed)
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn pow(s: &Scalar, k: u32) -> Scalar {
    let mut acc = one();
    for _ in 0..k {
        acc *= s;
    }
    acc
}

pub fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_fractions_in_lowest_terms() {
        assert_eq!(parse("2/4").unwrap(), half());
        assert_eq!(parse(" -3 ").unwrap(), int(-3));
        assert_eq!(parse("6/-4").unwrap(), frac(-3, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format(&frac(10, -4)), "-5/2");
        assert_eq!(format(&int(7)), "7");
        assert_eq!(format(&zero()), "0");
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
            let s = frac(p, q);
            prop_assert_eq!(parse(&format(&s)).unwrap(), s);
        }
    }
}
