//! The exact scalar abstraction.
//!
//! All algorithms in this crate are written against [`Scalar`], an exact field
//! with literal equality. The one instantiation used throughout is
//! [`crate::Rational`] (arbitrary-precision reduced rationals); the trait
//! exists so the kernels stay scalar-agnostic, not to admit approximate types.
//! Approximate arithmetic would violate the contract: `==` below always means
//! mathematical equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, NumAssign, One, Signed};
use std::fmt::{Debug, Display};

/// An exact field scalar.
///
/// Every arithmetic operation must be exact and `PartialEq` must be
/// mathematical equality; zero tests throughout the crate rely on it.
pub trait Scalar: Num + NumAssign + Signed + PartialOrd + Clone + Debug + Display {
    /// Embeds a machine integer.
    fn from_int(n: i64) -> Self;

    /// The fraction `num / den`. `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Parses the canonical textual form produced by `Display`.
    fn parse_str(s: &str) -> Result<Self, String>;

    /// A factor that clears the denominators of `row`, when the type has a
    /// meaningful notion of one. Row reduction multiplies rows by this before
    /// fraction-free elimination so intermediate values stay integral.
    fn clearing_factor(row: &[Self]) -> Option<Self> {
        let _ = row;
        None
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn parse_str(s: &str) -> Result<Self, String> {
        s.parse::<BigRational>().map_err(|e| e.to_string())
    }

    fn clearing_factor(row: &[Self]) -> Option<Self> {
        let mut lcm = BigInt::one();
        for x in row {
            lcm = lcm.lcm(x.denom());
        }
        if lcm.is_one() {
            None
        } else {
            Some(BigRational::from_integer(lcm))
        }
    }
}

/// Shorthand for an exact rational, reduced with positive denominator.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
