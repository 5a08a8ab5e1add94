//! Integral and rational weights in Dynkin-label coordinates.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Integral weight, stored as its Dynkin labels (coordinates in the basis of
/// fundamental weights).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(labels: Vec<i64>) -> Self {
        Weight(labels)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The Weyl vector: every label equal to one.
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&l| l >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&l| l == 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|l| l * k).collect())
    }

    pub fn to_rational(&self) -> RationalWeight {
        RationalWeight(self.0.iter().map(|&l| BigRational::from_integer(l.into())).collect())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = std::num::ParseIntError;

    /// Accepts `1,2,0`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        s.split(',').map(|t| t.trim().parse()).collect::<Result<_, _>>().map(Weight)
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(v: [i64; N]) -> Self {
        Weight(v.to_vec())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Weight with rational Dynkin labels (the reduced Weyl vector lives here).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalWeight(pub Vec<BigRational>);

impl RationalWeight {
    pub fn zero(rank: usize) -> Self {
        RationalWeight(vec![BigRational::zero(); rank])
    }

    pub fn labels(&self) -> &[BigRational] {
        &self.0
    }
}

impl fmt::Display for RationalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

impl Add for &RationalWeight {
    type Output = RationalWeight;
    fn add(self, rhs: &RationalWeight) -> RationalWeight {
        RationalWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}
