//! Exact representation theory of the finite-dimensional simple Lie algebras
//! via dimension and layer polynomials.
//!
//! Weights are integer Dynkin-label vectors ([`Weight`]). Everything else is
//! exact: polynomial coefficients are arbitrary-precision rationals and
//! matrix entries are integers.
//!
//! ```
//! use layerlie::{Algebra, Weight};
//!
//! let g2 = Algebra::from_token("G2").unwrap();
//! let r = &g2.layer_polynomial().unwrap().poly;
//! assert_eq!(r.to_text(), "1 + 3*l1 + 3*l2 + 9*l1^2 + 12*l1*l2 + 3*l2^2");
//!
//! let lambda: Weight = "1,1".parse().unwrap();
//! let ch = layerlie::charcalc::layer_decomposition(&g2, &lambda).unwrap();
//! assert_eq!(ch.coeff(&"0,1".parse().unwrap()), 2);
//! ```

pub mod algebra;
pub mod charcalc;
pub mod error;
pub mod fixtures;
pub mod layercalc;
pub mod matrix;
pub mod polyring;
pub mod rootsystem;
pub mod scalar;
pub mod weight;
pub mod weylgroup;

use num_rational::BigRational;

pub use algebra::Algebra;
pub use error::{Counterexample, Error, Result};
pub use matrix::UnitriangularMatrix;
pub use polyring::MultiPoly;
pub use rootsystem::{LieType, RootSystem, Series};
pub use weight::{RationalWeight, Weight};

pub type Rational = BigRational;
pub type Poly = MultiPoly<Rational>;
pub type IntMatrix = UnitriangularMatrix<i64>;
