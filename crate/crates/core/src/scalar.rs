//! Coefficient fields.
//!
//! Everything in this crate is generic over [`Scalar`]. The exact field
//! [`BigRational`] is what the theorem checks, the parser and the CLI use;
//! `f64`/`f32` are accepted for numeric evaluation where exactness is not
//! needed (equality of canonical forms is then only as good as the floats).

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

/// A field of characteristic zero usable as a polynomial coefficient.
pub trait Scalar: Clone + PartialEq + Debug + Display + Signed + Send + Sync + 'static {
    /// Image of an integer under the canonical map `Z -> Self`.
    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }
}

impl Scalar for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

impl Scalar for f64 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Scalar for f32 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f32().unwrap_or(f32::INFINITY)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_embedding() {
        let big = BigInt::from(10).pow(30);
        assert_eq!(BigRational::from_bigint(&big), BigRational::from_integer(big.clone()));
        assert_eq!(f64::from_i64(-3), -3.0);
        assert_eq!(f32::from_bigint(&BigInt::from(7)), 7.0f32);
    }
}
