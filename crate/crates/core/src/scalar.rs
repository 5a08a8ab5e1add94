//! Scalar abstraction shared by the polynomial ring and the triangular matrices.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed};

/// Coefficient ring for [`MultiPoly`](crate::polyring::MultiPoly).
///
/// Anything that behaves like a commutative ring containing the integers
/// qualifies: `BigRational` for exact work, `f64` for quick numerics,
/// `Ratio<i64>` when the coefficients are known to stay small.
pub trait Scalar: Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + FromPrimitive + Send + Sync {
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer is representable")
    }
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
}

/// Integer-like entries of unitriangular matrices and character expansions.
pub trait RingInt: Scalar + Signed + Ord {}

impl<T> RingInt for T where T: Scalar + Signed + Ord {}

/// Render a rational as `"p/q"`, always with an explicit denominator.
pub fn rational_to_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parse `"p/q"` or a bare integer `"p"`.
pub fn rational_from_str(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}
