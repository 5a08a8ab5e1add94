//! Published layer polynomials and reduced Weyl vectors for the algebras of
//! rank at most four and `A_5`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::rootsystem::LieType;
use crate::Poly;

/// Stored data for one algebra.
#[derive(Debug)]
pub struct Fixture {
    pub token: &'static str,
    /// `2 rho'` in root coordinates.
    pub rho_prime_doubled: &'static [i64],
    /// `R` as `(exponents, numerator, denominator)`.
    pub layer_terms: &'static [(&'static [u32], i64, i64)],
}

impl Fixture {
    pub fn lie_type(&self) -> LieType {
        self.token.parse().expect("fixture tokens are valid")
    }

    pub fn layer_polynomial(&self) -> Poly {
        let nvars = self.rho_prime_doubled.len();
        Poly::from_terms(
            nvars,
            self.layer_terms.iter().map(|(e, n, d)| (e.to_vec(), BigRational::new(BigInt::from(*n), BigInt::from(*d)))),
        )
    }

    pub fn rho_prime_root_coords(&self) -> Vec<BigRational> {
        self.rho_prime_doubled.iter().map(|&c| BigRational::new(c.into(), 2.into())).collect()
    }
}

pub fn all() -> &'static [Fixture] {
    FIXTURES
}

pub fn lookup(lie_type: LieType) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.lie_type() == lie_type)
}

static FIXTURES: &[Fixture] = &[
    Fixture { token: "A1", rho_prime_doubled: &[0], layer_terms: &[(&[0], 1, 1), (&[1], 1, 1)] },
    Fixture {
        token: "A2",
        rho_prime_doubled: &[1, 1],
        layer_terms: &[
            (&[0, 0], 1, 1),
            (&[1, 0], 3, 2),
            (&[0, 1], 3, 2),
            (&[2, 0], 1, 2),
            (&[1, 1], 2, 1),
            (&[0, 2], 1, 2),
        ],
    },
    Fixture {
        token: "A3",
        rho_prime_doubled: &[2, 3, 2],
        layer_terms: &[
            (&[0, 0, 0], 1, 1),
            (&[1, 0, 0], 11, 6),
            (&[0, 1, 0], 7, 3),
            (&[0, 0, 1], 11, 6),
            (&[2, 0, 0], 1, 1),
            (&[1, 1, 0], 4, 1),
            (&[1, 0, 1], 3, 1),
            (&[0, 2, 0], 2, 1),
            (&[0, 1, 1], 4, 1),
            (&[0, 0, 2], 1, 1),
            (&[3, 0, 0], 1, 6),
            (&[2, 1, 0], 1, 1),
            (&[2, 0, 1], 3, 2),
            (&[1, 2, 0], 2, 1),
            (&[1, 1, 1], 6, 1),
            (&[1, 0, 2], 3, 2),
            (&[0, 3, 0], 2, 3),
            (&[0, 2, 1], 2, 1),
            (&[0, 1, 2], 1, 1),
            (&[0, 0, 3], 1, 6),
        ],
    },
    Fixture {
        token: "A4",
        rho_prime_doubled: &[3, 5, 5, 3],
        layer_terms: &[
            (&[0, 0, 0, 0], 1, 1),
            (&[1, 0, 0, 0], 25, 12),
            (&[0, 1, 0, 0], 35, 12),
            (&[0, 0, 1, 0], 35, 12),
            (&[0, 0, 0, 1], 25, 12),
            (&[2, 0, 0, 0], 35, 24),
            (&[1, 1, 0, 0], 35, 6),
            (&[1, 0, 1, 0], 65, 12),
            (&[1, 0, 0, 1], 25, 6),
            (&[0, 2, 0, 0], 85, 24),
            (&[0, 1, 1, 0], 25, 3),
            (&[0, 1, 0, 1], 65, 12),
            (&[0, 0, 2, 0], 85, 24),
            (&[0, 0, 1, 1], 35, 6),
            (&[0, 0, 0, 2], 35, 24),
            (&[3, 0, 0, 0], 5, 12),
            (&[2, 1, 0, 0], 5, 2),
            (&[2, 0, 1, 0], 15, 4),
            (&[2, 0, 0, 1], 5, 2),
            (&[1, 2, 0, 0], 5, 1),
            (&[1, 1, 1, 0], 15, 1),
            (&[1, 1, 0, 1], 10, 1),
            (&[1, 0, 2, 0], 25, 4),
            (&[1, 0, 1, 1], 10, 1),
            (&[1, 0, 0, 2], 5, 2),
            (&[0, 3, 0, 0], 25, 12),
            (&[0, 2, 1, 0], 15, 2),
            (&[0, 2, 0, 1], 25, 4),
            (&[0, 1, 2, 0], 15, 2),
            (&[0, 1, 1, 1], 15, 1),
            (&[0, 1, 0, 2], 15, 4),
            (&[0, 0, 3, 0], 25, 12),
            (&[0, 0, 2, 1], 5, 1),
            (&[0, 0, 1, 2], 5, 2),
            (&[0, 0, 0, 3], 5, 12),
            (&[4, 0, 0, 0], 1, 24),
            (&[3, 1, 0, 0], 1, 3),
            (&[3, 0, 1, 0], 1, 2),
            (&[3, 0, 0, 1], 2, 3),
            (&[2, 2, 0, 0], 1, 1),
            (&[2, 1, 1, 0], 3, 1),
            (&[2, 1, 0, 1], 4, 1),
            (&[2, 0, 2, 0], 9, 4),
            (&[2, 0, 1, 1], 6, 1),
            (&[2, 0, 0, 2], 3, 2),
            (&[1, 3, 0, 0], 4, 3),
            (&[1, 2, 1, 0], 6, 1),
            (&[1, 2, 0, 1], 8, 1),
            (&[1, 1, 2, 0], 9, 1),
            (&[1, 1, 1, 1], 24, 1),
            (&[1, 1, 0, 2], 6, 1),
            (&[1, 0, 3, 0], 17, 6),
            (&[1, 0, 2, 1], 8, 1),
            (&[1, 0, 1, 2], 4, 1),
            (&[1, 0, 0, 3], 2, 3),
            (&[0, 4, 0, 0], 11, 24),
            (&[0, 3, 1, 0], 7, 3),
            (&[0, 3, 0, 1], 17, 6),
            (&[0, 2, 2, 0], 4, 1),
            (&[0, 2, 1, 1], 9, 1),
            (&[0, 2, 0, 2], 9, 4),
            (&[0, 1, 3, 0], 7, 3),
            (&[0, 1, 2, 1], 6, 1),
            (&[0, 1, 1, 2], 3, 1),
            (&[0, 1, 0, 3], 1, 2),
            (&[0, 0, 4, 0], 11, 24),
            (&[0, 0, 3, 1], 4, 3),
            (&[0, 0, 2, 2], 1, 1),
            (&[0, 0, 1, 3], 1, 3),
            (&[0, 0, 0, 4], 1, 24),
        ],
    },
    Fixture {
        token: "A5",
        rho_prime_doubled: &[4, 7, 8, 7, 4],
        layer_terms: &[
            (&[0, 0, 0, 0, 0], 1, 1),
            (&[1, 0, 0, 0, 0], 137, 60),
            (&[0, 1, 0, 0, 0], 101, 30),
            (&[0, 0, 1, 0, 0], 37, 10),
            (&[0, 0, 0, 1, 0], 101, 30),
            (&[0, 0, 0, 0, 1], 137, 60),
            (&[2, 0, 0, 0, 0], 15, 8),
            (&[1, 1, 0, 0, 0], 15, 2),
            (&[1, 0, 1, 0, 0], 15, 2),
            (&[1, 0, 0, 1, 0], 15, 2),
            (&[1, 0, 0, 0, 1], 5, 1),
            (&[0, 2, 0, 0, 0], 5, 1),
            (&[0, 1, 1, 0, 0], 25, 2),
            (&[0, 1, 0, 1, 0], 10, 1),
            (&[0, 1, 0, 0, 1], 15, 2),
            (&[0, 0, 2, 0, 0], 25, 4),
            (&[0, 0, 1, 1, 0], 25, 2),
            (&[0, 0, 1, 0, 1], 15, 2),
            (&[0, 0, 0, 2, 0], 5, 1),
            (&[0, 0, 0, 1, 1], 15, 2),
            (&[0, 0, 0, 0, 2], 15, 8),
            (&[3, 0, 0, 0, 0], 17, 24),
            (&[2, 1, 0, 0, 0], 17, 4),
            (&[2, 0, 1, 0, 0], 51, 8),
            (&[2, 0, 0, 1, 0], 31, 6),
            (&[2, 0, 0, 0, 1], 95, 24),
            (&[1, 2, 0, 0, 0], 17, 2),
            (&[1, 1, 1, 0, 0], 51, 2),
            (&[1, 1, 0, 1, 0], 62, 3),
            (&[1, 1, 0, 0, 1], 95, 6),
            (&[1, 0, 2, 0, 0], 49, 4),
            (&[1, 0, 1, 1, 0], 47, 2),
            (&[1, 0, 1, 0, 1], 15, 1),
            (&[1, 0, 0, 2, 0], 59, 6),
            (&[1, 0, 0, 1, 1], 95, 6),
            (&[1, 0, 0, 0, 2], 95, 24),
            (&[0, 3, 0, 0, 0], 47, 12),
            (&[0, 2, 1, 0, 0], 15, 1),
            (&[0, 2, 0, 1, 0], 179, 12),
            (&[0, 2, 0, 0, 1], 59, 6),
            (&[0, 1, 2, 0, 0], 69, 4),
            (&[0, 1, 1, 1, 0], 39, 1),
            (&[0, 1, 1, 0, 1], 47, 2),
            (&[0, 1, 0, 2, 0], 179, 12),
            (&[0, 1, 0, 1, 1], 62, 3),
            (&[0, 1, 0, 0, 2], 31, 6),
            (&[0, 0, 3, 0, 0], 23, 4),
            (&[0, 0, 2, 1, 0], 69, 4),
            (&[0, 0, 2, 0, 1], 49, 4),
            (&[0, 0, 1, 2, 0], 15, 1),
            (&[0, 0, 1, 1, 1], 51, 2),
            (&[0, 0, 1, 0, 2], 51, 8),
            (&[0, 0, 0, 3, 0], 47, 12),
            (&[0, 0, 0, 2, 1], 17, 2),
            (&[0, 0, 0, 1, 2], 17, 4),
            (&[0, 0, 0, 0, 3], 17, 24),
            (&[4, 0, 0, 0, 0], 1, 8),
            (&[3, 1, 0, 0, 0], 1, 1),
            (&[3, 0, 1, 0, 0], 3, 2),
            (&[3, 0, 0, 1, 0], 2, 1),
            (&[3, 0, 0, 0, 1], 5, 4),
            (&[2, 2, 0, 0, 0], 3, 1),
            (&[2, 1, 1, 0, 0], 9, 1),
            (&[2, 1, 0, 1, 0], 12, 1),
            (&[2, 1, 0, 0, 1], 15, 2),
            (&[2, 0, 2, 0, 0], 27, 4),
            (&[2, 0, 1, 1, 0], 18, 1),
            (&[2, 0, 1, 0, 1], 45, 4),
            (&[2, 0, 0, 2, 0], 7, 1),
            (&[2, 0, 0, 1, 1], 10, 1),
            (&[2, 0, 0, 0, 2], 5, 2),
            (&[1, 3, 0, 0, 0], 4, 1),
            (&[1, 2, 1, 0, 0], 18, 1),
            (&[1, 2, 0, 1, 0], 24, 1),
            (&[1, 2, 0, 0, 1], 15, 1),
            (&[1, 1, 2, 0, 0], 27, 1),
            (&[1, 1, 1, 1, 0], 72, 1),
            (&[1, 1, 1, 0, 1], 45, 1),
            (&[1, 1, 0, 2, 0], 28, 1),
            (&[1, 1, 0, 1, 1], 40, 1),
            (&[1, 1, 0, 0, 2], 10, 1),
            (&[1, 0, 3, 0, 0], 39, 4),
            (&[1, 0, 2, 1, 0], 63, 2),
            (&[1, 0, 2, 0, 1], 45, 2),
            (&[1, 0, 1, 2, 0], 27, 1),
            (&[1, 0, 1, 1, 1], 45, 1),
            (&[1, 0, 1, 0, 2], 45, 4),
            (&[1, 0, 0, 3, 0], 7, 1),
            (&[1, 0, 0, 2, 1], 15, 1),
            (&[1, 0, 0, 1, 2], 15, 2),
            (&[1, 0, 0, 0, 3], 5, 4),
            (&[0, 4, 0, 0, 0], 3, 2),
            (&[0, 3, 1, 0, 0], 8, 1),
            (&[0, 3, 0, 1, 0], 10, 1),
            (&[0, 3, 0, 0, 1], 7, 1),
            (&[0, 2, 2, 0, 0], 15, 1),
            (&[0, 2, 1, 1, 0], 36, 1),
            (&[0, 2, 1, 0, 1], 27, 1),
            (&[0, 2, 0, 2, 0], 16, 1),
            (&[0, 2, 0, 1, 1], 28, 1),
            (&[0, 2, 0, 0, 2], 7, 1),
            (&[0, 1, 3, 0, 0], 11, 1),
            (&[0, 1, 2, 1, 0], 36, 1),
            (&[0, 1, 2, 0, 1], 63, 2),
            (&[0, 1, 1, 2, 0], 36, 1),
            (&[0, 1, 1, 1, 1], 72, 1),
            (&[0, 1, 1, 0, 2], 18, 1),
            (&[0, 1, 0, 3, 0], 10, 1),
            (&[0, 1, 0, 2, 1], 24, 1),
            (&[0, 1, 0, 1, 2], 12, 1),
            (&[0, 1, 0, 0, 3], 2, 1),
            (&[0, 0, 4, 0, 0], 11, 4),
            (&[0, 0, 3, 1, 0], 11, 1),
            (&[0, 0, 3, 0, 1], 39, 4),
            (&[0, 0, 2, 2, 0], 15, 1),
            (&[0, 0, 2, 1, 1], 27, 1),
            (&[0, 0, 2, 0, 2], 27, 4),
            (&[0, 0, 1, 3, 0], 8, 1),
            (&[0, 0, 1, 2, 1], 18, 1),
            (&[0, 0, 1, 1, 2], 9, 1),
            (&[0, 0, 1, 0, 3], 3, 2),
            (&[0, 0, 0, 4, 0], 3, 2),
            (&[0, 0, 0, 3, 1], 4, 1),
            (&[0, 0, 0, 2, 2], 3, 1),
            (&[0, 0, 0, 1, 3], 1, 1),
            (&[0, 0, 0, 0, 4], 1, 8),
            (&[5, 0, 0, 0, 0], 1, 120),
            (&[4, 1, 0, 0, 0], 1, 12),
            (&[4, 0, 1, 0, 0], 1, 8),
            (&[4, 0, 0, 1, 0], 1, 6),
            (&[4, 0, 0, 0, 1], 5, 24),
            (&[3, 2, 0, 0, 0], 1, 3),
            (&[3, 1, 1, 0, 0], 1, 1),
            (&[3, 1, 0, 1, 0], 4, 3),
            (&[3, 1, 0, 0, 1], 5, 3),
            (&[3, 0, 2, 0, 0], 3, 4),
            (&[3, 0, 1, 1, 0], 2, 1),
            (&[3, 0, 1, 0, 1], 5, 2),
            (&[3, 0, 0, 2, 0], 4, 3),
            (&[3, 0, 0, 1, 1], 10, 3),
            (&[3, 0, 0, 0, 2], 5, 6),
            (&[2, 3, 0, 0, 0], 2, 3),
            (&[2, 2, 1, 0, 0], 3, 1),
            (&[2, 2, 0, 1, 0], 4, 1),
            (&[2, 2, 0, 0, 1], 5, 1),
            (&[2, 1, 2, 0, 0], 9, 2),
            (&[2, 1, 1, 1, 0], 12, 1),
            (&[2, 1, 1, 0, 1], 15, 1),
            (&[2, 1, 0, 2, 0], 8, 1),
            (&[2, 1, 0, 1, 1], 20, 1),
            (&[2, 1, 0, 0, 2], 5, 1),
            (&[2, 0, 3, 0, 0], 9, 4),
            (&[2, 0, 2, 1, 0], 9, 1),
            (&[2, 0, 2, 0, 1], 45, 4),
            (&[2, 0, 1, 2, 0], 12, 1),
            (&[2, 0, 1, 1, 1], 30, 1),
            (&[2, 0, 1, 0, 2], 15, 2),
            (&[2, 0, 0, 3, 0], 11, 3),
            (&[2, 0, 0, 2, 1], 10, 1),
            (&[2, 0, 0, 1, 2], 5, 1),
            (&[2, 0, 0, 0, 3], 5, 6),
            (&[1, 4, 0, 0, 0], 2, 3),
            (&[1, 3, 1, 0, 0], 4, 1),
            (&[1, 3, 0, 1, 0], 16, 3),
            (&[1, 3, 0, 0, 1], 20, 3),
            (&[1, 2, 2, 0, 0], 9, 1),
            (&[1, 2, 1, 1, 0], 24, 1),
            (&[1, 2, 1, 0, 1], 30, 1),
            (&[1, 2, 0, 2, 0], 16, 1),
            (&[1, 2, 0, 1, 1], 40, 1),
            (&[1, 2, 0, 0, 2], 10, 1),
            (&[1, 1, 3, 0, 0], 9, 1),
            (&[1, 1, 2, 1, 0], 36, 1),
            (&[1, 1, 2, 0, 1], 45, 1),
            (&[1, 1, 1, 2, 0], 48, 1),
            (&[1, 1, 1, 1, 1], 120, 1),
            (&[1, 1, 1, 0, 2], 30, 1),
            (&[1, 1, 0, 3, 0], 44, 3),
            (&[1, 1, 0, 2, 1], 40, 1),
            (&[1, 1, 0, 1, 2], 20, 1),
            (&[1, 1, 0, 0, 3], 10, 3),
            (&[1, 0, 4, 0, 0], 11, 4),
            (&[1, 0, 3, 1, 0], 13, 1),
            (&[1, 0, 3, 0, 1], 15, 1),
            (&[1, 0, 2, 2, 0], 21, 1),
            (&[1, 0, 2, 1, 1], 45, 1),
            (&[1, 0, 2, 0, 2], 45, 4),
            (&[1, 0, 1, 3, 0], 12, 1),
            (&[1, 0, 1, 2, 1], 30, 1),
            (&[1, 0, 1, 1, 2], 15, 1),
            (&[1, 0, 1, 0, 3], 5, 2),
            (&[1, 0, 0, 4, 0], 7, 3),
            (&[1, 0, 0, 3, 1], 20, 3),
            (&[1, 0, 0, 2, 2], 5, 1),
            (&[1, 0, 0, 1, 3], 5, 3),
            (&[1, 0, 0, 0, 4], 5, 24),
            (&[0, 5, 0, 0, 0], 13, 60),
            (&[0, 4, 1, 0, 0], 3, 2),
            (&[0, 4, 0, 1, 0], 23, 12),
            (&[0, 4, 0, 0, 1], 7, 3),
            (&[0, 3, 2, 0, 0], 4, 1),
            (&[0, 3, 1, 1, 0], 10, 1),
            (&[0, 3, 1, 0, 1], 12, 1),
            (&[0, 3, 0, 2, 0], 37, 6),
            (&[0, 3, 0, 1, 1], 44, 3),
            (&[0, 3, 0, 0, 2], 11, 3),
            (&[0, 2, 3, 0, 0], 5, 1),
            (&[0, 2, 2, 1, 0], 18, 1),
            (&[0, 2, 2, 0, 1], 21, 1),
            (&[0, 2, 1, 2, 0], 21, 1),
            (&[0, 2, 1, 1, 1], 48, 1),
            (&[0, 2, 1, 0, 2], 12, 1),
            (&[0, 2, 0, 3, 0], 37, 6),
            (&[0, 2, 0, 2, 1], 16, 1),
            (&[0, 2, 0, 1, 2], 8, 1),
            (&[0, 2, 0, 0, 3], 4, 3),
            (&[0, 1, 4, 0, 0], 11, 4),
            (&[0, 1, 3, 1, 0], 12, 1),
            (&[0, 1, 3, 0, 1], 13, 1),
            (&[0, 1, 2, 2, 0], 18, 1),
            (&[0, 1, 2, 1, 1], 36, 1),
            (&[0, 1, 2, 0, 2], 9, 1),
            (&[0, 1, 1, 3, 0], 10, 1),
            (&[0, 1, 1, 2, 1], 24, 1),
            (&[0, 1, 1, 1, 2], 12, 1),
            (&[0, 1, 1, 0, 3], 2, 1),
            (&[0, 1, 0, 4, 0], 23, 12),
            (&[0, 1, 0, 3, 1], 16, 3),
            (&[0, 1, 0, 2, 2], 4, 1),
            (&[0, 1, 0, 1, 3], 4, 3),
            (&[0, 1, 0, 0, 4], 1, 6),
            (&[0, 0, 5, 0, 0], 11, 20),
            (&[0, 0, 4, 1, 0], 11, 4),
            (&[0, 0, 4, 0, 1], 11, 4),
            (&[0, 0, 3, 2, 0], 5, 1),
            (&[0, 0, 3, 1, 1], 9, 1),
            (&[0, 0, 3, 0, 2], 9, 4),
            (&[0, 0, 2, 3, 0], 4, 1),
            (&[0, 0, 2, 2, 1], 9, 1),
            (&[0, 0, 2, 1, 2], 9, 2),
            (&[0, 0, 2, 0, 3], 3, 4),
            (&[0, 0, 1, 4, 0], 3, 2),
            (&[0, 0, 1, 3, 1], 4, 1),
            (&[0, 0, 1, 2, 2], 3, 1),
            (&[0, 0, 1, 1, 3], 1, 1),
            (&[0, 0, 1, 0, 4], 1, 8),
            (&[0, 0, 0, 5, 0], 13, 60),
            (&[0, 0, 0, 4, 1], 2, 3),
            (&[0, 0, 0, 3, 2], 2, 3),
            (&[0, 0, 0, 2, 3], 1, 3),
            (&[0, 0, 0, 1, 4], 1, 12),
            (&[0, 0, 0, 0, 5], 1, 120),
        ],
    },
    Fixture {
        token: "B2",
        rho_prime_doubled: &[2, 3],
        layer_terms: &[
            (&[0, 0], 1, 1),
            (&[1, 0], 2, 1),
            (&[0, 1], 2, 1),
            (&[2, 0], 2, 1),
            (&[1, 1], 4, 1),
            (&[0, 2], 1, 1),
        ],
    },
    Fixture {
        token: "B3",
        rho_prime_doubled: &[4, 7, 8],
        layer_terms: &[
            (&[0, 0, 0], 1, 1),
            (&[1, 0, 0], 8, 3),
            (&[0, 1, 0], 10, 3),
            (&[0, 0, 1], 3, 1),
            (&[2, 0, 0], 2, 1),
            (&[1, 1, 0], 8, 1),
            (&[1, 0, 1], 6, 1),
            (&[0, 2, 0], 8, 1),
            (&[0, 1, 1], 12, 1),
            (&[0, 0, 2], 3, 1),
            (&[3, 0, 0], 4, 3),
            (&[2, 1, 0], 8, 1),
            (&[2, 0, 1], 6, 1),
            (&[1, 2, 0], 16, 1),
            (&[1, 1, 1], 24, 1),
            (&[1, 0, 2], 6, 1),
            (&[0, 3, 0], 20, 3),
            (&[0, 2, 1], 12, 1),
            (&[0, 1, 2], 6, 1),
            (&[0, 0, 3], 1, 1),
        ],
    },
    Fixture {
        token: "B4",
        rho_prime_doubled: &[6, 11, 14, 15],
        layer_terms: &[
            (&[0, 0, 0, 0], 1, 1),
            (&[1, 0, 0, 0], 8, 3),
            (&[0, 1, 0, 0], 16, 3),
            (&[0, 0, 1, 0], 4, 1),
            (&[0, 0, 0, 1], 4, 1),
            (&[2, 0, 0, 0], 10, 3),
            (&[1, 1, 0, 0], 40, 3),
            (&[1, 0, 1, 0], 12, 1),
            (&[1, 0, 0, 1], 32, 3),
            (&[0, 2, 0, 0], 8, 1),
            (&[0, 1, 1, 0], 56, 3),
            (&[0, 1, 0, 1], 40, 3),
            (&[0, 0, 2, 0], 50, 3),
            (&[0, 0, 1, 1], 24, 1),
            (&[0, 0, 0, 2], 6, 1),
            (&[3, 0, 0, 0], 4, 3),
            (&[2, 1, 0, 0], 8, 1),
            (&[2, 0, 1, 0], 12, 1),
            (&[2, 0, 0, 1], 8, 1),
            (&[1, 2, 0, 0], 16, 1),
            (&[1, 1, 1, 0], 48, 1),
            (&[1, 1, 0, 1], 32, 1),
            (&[1, 0, 2, 0], 36, 1),
            (&[1, 0, 1, 1], 48, 1),
            (&[1, 0, 0, 2], 12, 1),
            (&[0, 3, 0, 0], 32, 3),
            (&[0, 2, 1, 0], 48, 1),
            (&[0, 2, 0, 1], 32, 1),
            (&[0, 1, 2, 0], 72, 1),
            (&[0, 1, 1, 1], 96, 1),
            (&[0, 1, 0, 2], 24, 1),
            (&[0, 0, 3, 0], 28, 1),
            (&[0, 0, 2, 1], 48, 1),
            (&[0, 0, 1, 2], 24, 1),
            (&[0, 0, 0, 3], 4, 1),
            (&[4, 0, 0, 0], 2, 3),
            (&[3, 1, 0, 0], 16, 3),
            (&[3, 0, 1, 0], 8, 1),
            (&[3, 0, 0, 1], 16, 3),
            (&[2, 2, 0, 0], 16, 1),
            (&[2, 1, 1, 0], 48, 1),
            (&[2, 1, 0, 1], 32, 1),
            (&[2, 0, 2, 0], 36, 1),
            (&[2, 0, 1, 1], 48, 1),
            (&[2, 0, 0, 2], 12, 1),
            (&[1, 3, 0, 0], 64, 3),
            (&[1, 2, 1, 0], 96, 1),
            (&[1, 2, 0, 1], 64, 1),
            (&[1, 1, 2, 0], 144, 1),
            (&[1, 1, 1, 1], 192, 1),
            (&[1, 1, 0, 2], 48, 1),
            (&[1, 0, 3, 0], 56, 1),
            (&[1, 0, 2, 1], 96, 1),
            (&[1, 0, 1, 2], 48, 1),
            (&[1, 0, 0, 3], 8, 1),
            (&[0, 4, 0, 0], 8, 1),
            (&[0, 3, 1, 0], 128, 3),
            (&[0, 3, 0, 1], 80, 3),
            (&[0, 2, 2, 0], 80, 1),
            (&[0, 2, 1, 1], 96, 1),
            (&[0, 2, 0, 2], 24, 1),
            (&[0, 1, 3, 0], 176, 3),
            (&[0, 1, 2, 1], 96, 1),
            (&[0, 1, 1, 2], 48, 1),
            (&[0, 1, 0, 3], 8, 1),
            (&[0, 0, 4, 0], 46, 3),
            (&[0, 0, 3, 1], 32, 1),
            (&[0, 0, 2, 2], 24, 1),
            (&[0, 0, 1, 3], 8, 1),
            (&[0, 0, 0, 4], 1, 1),
        ],
    },
    Fixture {
        token: "C3",
        rho_prime_doubled: &[5, 9, 5],
        layer_terms: &[
            (&[0, 0, 0], 1, 1),
            (&[1, 0, 0], 7, 3),
            (&[0, 1, 0], 11, 3),
            (&[0, 0, 1], 3, 1),
            (&[2, 0, 0], 2, 1),
            (&[1, 1, 0], 8, 1),
            (&[1, 0, 1], 6, 1),
            (&[0, 2, 0], 5, 1),
            (&[0, 1, 1], 12, 1),
            (&[0, 0, 2], 6, 1),
            (&[3, 0, 0], 2, 3),
            (&[2, 1, 0], 4, 1),
            (&[2, 0, 1], 6, 1),
            (&[1, 2, 0], 8, 1),
            (&[1, 1, 1], 24, 1),
            (&[1, 0, 2], 12, 1),
            (&[0, 3, 0], 10, 3),
            (&[0, 2, 1], 12, 1),
            (&[0, 1, 2], 12, 1),
            (&[0, 0, 3], 4, 1),
        ],
    },
    Fixture {
        token: "C4",
        rho_prime_doubled: &[7, 13, 17, 9],
        layer_terms: &[
            (&[0, 0, 0, 0], 1, 1),
            (&[1, 0, 0, 0], 8, 3),
            (&[0, 1, 0, 0], 4, 1),
            (&[0, 0, 1, 0], 16, 3),
            (&[0, 0, 0, 1], 4, 1),
            (&[2, 0, 0, 0], 8, 3),
            (&[1, 1, 0, 0], 32, 3),
            (&[1, 0, 1, 0], 12, 1),
            (&[1, 0, 0, 1], 32, 3),
            (&[0, 2, 0, 0], 8, 1),
            (&[0, 1, 1, 0], 64, 3),
            (&[0, 1, 0, 1], 40, 3),
            (&[0, 0, 2, 0], 34, 3),
            (&[0, 0, 1, 1], 24, 1),
            (&[0, 0, 0, 2], 12, 1),
            (&[3, 0, 0, 0], 4, 3),
            (&[2, 1, 0, 0], 8, 1),
            (&[2, 0, 1, 0], 12, 1),
            (&[2, 0, 0, 1], 8, 1),
            (&[1, 2, 0, 0], 16, 1),
            (&[1, 1, 1, 0], 48, 1),
            (&[1, 1, 0, 1], 32, 1),
            (&[1, 0, 2, 0], 24, 1),
            (&[1, 0, 1, 1], 48, 1),
            (&[1, 0, 0, 2], 24, 1),
            (&[0, 3, 0, 0], 8, 1),
            (&[0, 2, 1, 0], 32, 1),
            (&[0, 2, 0, 1], 32, 1),
            (&[0, 1, 2, 0], 40, 1),
            (&[0, 1, 1, 1], 96, 1),
            (&[0, 1, 0, 2], 48, 1),
            (&[0, 0, 3, 0], 44, 3),
            (&[0, 0, 2, 1], 48, 1),
            (&[0, 0, 1, 2], 48, 1),
            (&[0, 0, 0, 3], 16, 1),
            (&[4, 0, 0, 0], 1, 3),
            (&[3, 1, 0, 0], 8, 3),
            (&[3, 0, 1, 0], 4, 1),
            (&[3, 0, 0, 1], 16, 3),
            (&[2, 2, 0, 0], 8, 1),
            (&[2, 1, 1, 0], 24, 1),
            (&[2, 1, 0, 1], 32, 1),
            (&[2, 0, 2, 0], 18, 1),
            (&[2, 0, 1, 1], 48, 1),
            (&[2, 0, 0, 2], 24, 1),
            (&[1, 3, 0, 0], 32, 3),
            (&[1, 2, 1, 0], 48, 1),
            (&[1, 2, 0, 1], 64, 1),
            (&[1, 1, 2, 0], 72, 1),
            (&[1, 1, 1, 1], 192, 1),
            (&[1, 1, 0, 2], 96, 1),
            (&[1, 0, 3, 0], 28, 1),
            (&[1, 0, 2, 1], 96, 1),
            (&[1, 0, 1, 2], 96, 1),
            (&[1, 0, 0, 3], 32, 1),
            (&[0, 4, 0, 0], 4, 1),
            (&[0, 3, 1, 0], 64, 3),
            (&[0, 3, 0, 1], 80, 3),
            (&[0, 2, 2, 0], 40, 1),
            (&[0, 2, 1, 1], 96, 1),
            (&[0, 2, 0, 2], 48, 1),
            (&[0, 1, 3, 0], 88, 3),
            (&[0, 1, 2, 1], 96, 1),
            (&[0, 1, 1, 2], 96, 1),
            (&[0, 1, 0, 3], 32, 1),
            (&[0, 0, 4, 0], 23, 3),
            (&[0, 0, 3, 1], 32, 1),
            (&[0, 0, 2, 2], 48, 1),
            (&[0, 0, 1, 3], 32, 1),
            (&[0, 0, 0, 4], 8, 1),
        ],
    },
    Fixture {
        token: "D4",
        rho_prime_doubled: &[5, 9, 5, 5],
        layer_terms: &[
            (&[0, 0, 0, 0], 1, 1),
            (&[1, 0, 0, 0], 8, 3),
            (&[0, 1, 0, 0], 4, 1),
            (&[0, 0, 1, 0], 8, 3),
            (&[0, 0, 0, 1], 8, 3),
            (&[2, 0, 0, 0], 8, 3),
            (&[1, 1, 0, 0], 32, 3),
            (&[1, 0, 1, 0], 6, 1),
            (&[1, 0, 0, 1], 6, 1),
            (&[0, 2, 0, 0], 8, 1),
            (&[0, 1, 1, 0], 32, 3),
            (&[0, 1, 0, 1], 32, 3),
            (&[0, 0, 2, 0], 8, 3),
            (&[0, 0, 1, 1], 6, 1),
            (&[0, 0, 0, 2], 8, 3),
            (&[3, 0, 0, 0], 4, 3),
            (&[2, 1, 0, 0], 8, 1),
            (&[2, 0, 1, 0], 6, 1),
            (&[2, 0, 0, 1], 6, 1),
            (&[1, 2, 0, 0], 16, 1),
            (&[1, 1, 1, 0], 24, 1),
            (&[1, 1, 0, 1], 24, 1),
            (&[1, 0, 2, 0], 6, 1),
            (&[1, 0, 1, 1], 12, 1),
            (&[1, 0, 0, 2], 6, 1),
            (&[0, 3, 0, 0], 8, 1),
            (&[0, 2, 1, 0], 16, 1),
            (&[0, 2, 0, 1], 16, 1),
            (&[0, 1, 2, 0], 8, 1),
            (&[0, 1, 1, 1], 24, 1),
            (&[0, 1, 0, 2], 8, 1),
            (&[0, 0, 3, 0], 4, 3),
            (&[0, 0, 2, 1], 6, 1),
            (&[0, 0, 1, 2], 6, 1),
            (&[0, 0, 0, 3], 4, 3),
            (&[4, 0, 0, 0], 1, 3),
            (&[3, 1, 0, 0], 8, 3),
            (&[3, 0, 1, 0], 2, 1),
            (&[3, 0, 0, 1], 2, 1),
            (&[2, 2, 0, 0], 8, 1),
            (&[2, 1, 1, 0], 12, 1),
            (&[2, 1, 0, 1], 12, 1),
            (&[2, 0, 2, 0], 3, 1),
            (&[2, 0, 1, 1], 12, 1),
            (&[2, 0, 0, 2], 3, 1),
            (&[1, 3, 0, 0], 32, 3),
            (&[1, 2, 1, 0], 24, 1),
            (&[1, 2, 0, 1], 24, 1),
            (&[1, 1, 2, 0], 12, 1),
            (&[1, 1, 1, 1], 48, 1),
            (&[1, 1, 0, 2], 12, 1),
            (&[1, 0, 3, 0], 2, 1),
            (&[1, 0, 2, 1], 12, 1),
            (&[1, 0, 1, 2], 12, 1),
            (&[1, 0, 0, 3], 2, 1),
            (&[0, 4, 0, 0], 4, 1),
            (&[0, 3, 1, 0], 32, 3),
            (&[0, 3, 0, 1], 32, 3),
            (&[0, 2, 2, 0], 8, 1),
            (&[0, 2, 1, 1], 24, 1),
            (&[0, 2, 0, 2], 8, 1),
            (&[0, 1, 3, 0], 8, 3),
            (&[0, 1, 2, 1], 12, 1),
            (&[0, 1, 1, 2], 12, 1),
            (&[0, 1, 0, 3], 8, 3),
            (&[0, 0, 4, 0], 1, 3),
            (&[0, 0, 3, 1], 2, 1),
            (&[0, 0, 2, 2], 3, 1),
            (&[0, 0, 1, 3], 2, 1),
            (&[0, 0, 0, 4], 1, 3),
        ],
    },
    Fixture {
        token: "F4",
        rho_prime_doubled: &[15, 29, 41, 21],
        layer_terms: &[
            (&[0, 0, 0, 0], 1, 1),
            (&[1, 0, 0, 0], 8, 1),
            (&[0, 1, 0, 0], 4, 1),
            (&[0, 0, 1, 0], 8, 1),
            (&[0, 0, 0, 1], 4, 1),
            (&[2, 0, 0, 0], 8, 1),
            (&[1, 1, 0, 0], 32, 1),
            (&[1, 0, 1, 0], 32, 1),
            (&[1, 0, 0, 1], 24, 1),
            (&[0, 2, 0, 0], 44, 1),
            (&[0, 1, 1, 0], 72, 1),
            (&[0, 1, 0, 1], 16, 1),
            (&[0, 0, 2, 0], 26, 1),
            (&[0, 0, 1, 1], 32, 1),
            (&[0, 0, 0, 2], 8, 1),
            (&[3, 0, 0, 0], 16, 1),
            (&[2, 1, 0, 0], 96, 1),
            (&[2, 0, 1, 0], 72, 1),
            (&[2, 0, 0, 1], 24, 1),
            (&[1, 2, 0, 0], 192, 1),
            (&[1, 1, 1, 0], 288, 1),
            (&[1, 1, 0, 1], 96, 1),
            (&[1, 0, 2, 0], 96, 1),
            (&[1, 0, 1, 1], 96, 1),
            (&[1, 0, 0, 2], 24, 1),
            (&[0, 3, 0, 0], 128, 1),
            (&[0, 2, 1, 0], 288, 1),
            (&[0, 2, 0, 1], 168, 1),
            (&[0, 1, 2, 0], 216, 1),
            (&[0, 1, 1, 1], 288, 1),
            (&[0, 1, 0, 2], 72, 1),
            (&[0, 0, 3, 0], 52, 1),
            (&[0, 0, 2, 1], 96, 1),
            (&[0, 0, 1, 2], 48, 1),
            (&[0, 0, 0, 3], 8, 1),
            (&[4, 0, 0, 0], 16, 1),
            (&[3, 1, 0, 0], 128, 1),
            (&[3, 0, 1, 0], 96, 1),
            (&[3, 0, 0, 1], 64, 1),
            (&[2, 2, 0, 0], 384, 1),
            (&[2, 1, 1, 0], 576, 1),
            (&[2, 1, 0, 1], 384, 1),
            (&[2, 0, 2, 0], 216, 1),
            (&[2, 0, 1, 1], 288, 1),
            (&[2, 0, 0, 2], 72, 1),
            (&[1, 3, 0, 0], 512, 1),
            (&[1, 2, 1, 0], 1152, 1),
            (&[1, 2, 0, 1], 768, 1),
            (&[1, 1, 2, 0], 864, 1),
            (&[1, 1, 1, 1], 1152, 1),
            (&[1, 1, 0, 2], 288, 1),
            (&[1, 0, 3, 0], 208, 1),
            (&[1, 0, 2, 1], 384, 1),
            (&[1, 0, 1, 2], 192, 1),
            (&[1, 0, 0, 3], 32, 1),
            (&[0, 4, 0, 0], 232, 1),
            (&[0, 3, 1, 0], 672, 1),
            (&[0, 3, 0, 1], 416, 1),
            (&[0, 2, 2, 0], 720, 1),
            (&[0, 2, 1, 1], 864, 1),
            (&[0, 2, 0, 2], 216, 1),
            (&[0, 1, 3, 0], 336, 1),
            (&[0, 1, 2, 1], 576, 1),
            (&[0, 1, 1, 2], 288, 1),
            (&[0, 1, 0, 3], 48, 1),
            (&[0, 0, 4, 0], 58, 1),
            (&[0, 0, 3, 1], 128, 1),
            (&[0, 0, 2, 2], 96, 1),
            (&[0, 0, 1, 3], 32, 1),
            (&[0, 0, 0, 4], 4, 1),
        ],
    },
    Fixture {
        token: "G2",
        rho_prime_doubled: &[5, 9],
        layer_terms: &[
            (&[0, 0], 1, 1),
            (&[1, 0], 3, 1),
            (&[0, 1], 3, 1),
            (&[2, 0], 9, 1),
            (&[1, 1], 12, 1),
            (&[0, 2], 3, 1),
        ],
    },
];
