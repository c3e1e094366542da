//! Exact ordered-field scalars.
//!
//! Every predicate in this crate is an exact sign test, so the scalar bound
//! deliberately excludes floating point: `f32`/`f64` are neither `Eq` nor
//! `Hash` and therefore never satisfy [`Scalar`].

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed};

use crate::error::Error;

/// An exact ordered field usable as a coordinate type.
pub trait Scalar:
    Clone + Debug + Display + Eq + Ord + Hash + Num + Signed + Send + Sync + 'static
{
    /// Lossless conversion to an arbitrary-precision rational.
    fn to_big_rational(&self) -> BigRational;

    /// Builds `num / den`. Panics if `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Parses `"p/q"` or `"p"`.
    fn parse_scalar(s: &str) -> Result<Self, Error>;

    fn from_int(v: i64) -> Self {
        Self::from_ratio(v, 1)
    }
}

macro_rules! impl_machine_ratio {
    ($($int:ty),*) => {$(
        impl Scalar for Ratio<$int> {
            fn to_big_rational(&self) -> BigRational {
                BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }

            fn from_ratio(num: i64, den: i64) -> Self {
                Ratio::new(num as $int, den as $int)
            }

            fn parse_scalar(s: &str) -> Result<Self, Error> {
                s.trim().parse::<Self>().map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: e.to_string(),
                })
            }
        }
    )*};
}

impl_machine_ratio!(i64, i128);

impl Scalar for BigRational {
    fn to_big_rational(&self) -> BigRational {
        self.clone()
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn parse_scalar(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad("invalid numerator"))?;
        let den: BigInt = den.parse().map_err(|_| bad("invalid denominator"))?;
        if den == BigInt::from(0) {
            return Err(bad("zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }
}

/// Formats as `"p/q"`, or `"p"` when the reduced denominator is one.
pub fn format_scalar<T: Scalar>(v: &T) -> String {
    let r = v.to_big_rational();
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn parse_and_format_round_trip() {
        let r = BigRational::parse_scalar("6/4").unwrap();
        assert_eq!(format_scalar(&r), "3/2");
        let r = BigRational::parse_scalar("-6").unwrap();
        assert_eq!(format_scalar(&r), "-6");
        let r = BigRational::parse_scalar("3/-6").unwrap();
        assert_eq!(format_scalar(&r), "-1/2");
        assert!(BigRational::parse_scalar("1/0").is_err());
        assert!(BigRational::parse_scalar("x").is_err());
        assert!(BigRational::parse_scalar("1.5").is_err());
    }

    #[test]
    fn machine_ratios_reduce() {
        let r = Rational64::parse_scalar("10/4").unwrap();
        assert_eq!(r, Rational64::new(5, 2));
        assert_eq!(format_scalar(&r), "5/2");
        assert_eq!(r.to_big_rational(), BigRational::from_ratio(5, 2));
    }
}
