//! A root system bundled with its lazily computed derived data.

use std::sync::OnceLock;

use crate::error::Result;
use crate::layercalc::{
    dim_polynomial, layer_polynomial_from, weyl_shift_table, zgroup_shift_table, LayerPolynomial, SignedShiftTable,
};
use crate::rootsystem::{LieType, RootSystem};
use crate::weight::Weight;
use crate::weylgroup::{enumerate_group, GroupTable, DEFAULT_MAX_ORDER};

/// Largest degree of `D` (the number of positive roots) expanded by default.
/// Covers every algebra of rank at most five.
pub const DEFAULT_MAX_DEGREE: usize = 25;
use crate::{Error, Poly};

/// Root system plus cached group table, polynomials and shift tables.
///
/// Everything is computed on first use and immutable afterwards, so an
/// `Algebra` can be shared across threads.
#[derive(Debug)]
pub struct Algebra {
    rs: RootSystem,
    max_order: u64,
    max_degree: usize,
    group: OnceLock<GroupTable>,
    weyl_table: OnceLock<SignedShiftTable>,
    zgroup_table: OnceLock<SignedShiftTable>,
    dim_poly: OnceLock<Poly>,
    layer_poly: OnceLock<LayerPolynomial>,
}

impl Algebra {
    pub fn new(lie_type: LieType) -> Self {
        Self::with_limits(lie_type, DEFAULT_MAX_ORDER, DEFAULT_MAX_DEGREE)
    }

    /// `max_order` bounds Weyl group enumeration; `max_degree` bounds the
    /// degree of polynomials that are expanded.
    pub fn with_limits(lie_type: LieType, max_order: u64, max_degree: usize) -> Self {
        Algebra {
            rs: RootSystem::new(lie_type),
            max_order,
            max_degree,
            group: OnceLock::new(),
            weyl_table: OnceLock::new(),
            zgroup_table: OnceLock::new(),
            dim_poly: OnceLock::new(),
            layer_poly: OnceLock::new(),
        }
    }

    pub fn from_token(token: &str) -> Result<Self> {
        Ok(Self::new(token.parse()?))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn group(&self) -> Result<&GroupTable> {
        if let Some(g) = self.group.get() {
            return Ok(g);
        }
        let g = enumerate_group(&self.rs, self.max_order)?;
        Ok(self.group.get_or_init(|| g))
    }

    pub fn weyl_order(&self) -> u64 {
        self.rs.lie_type().weyl_group_order()
    }

    pub fn weyl_table(&self) -> Result<&SignedShiftTable> {
        let g = self.group()?;
        Ok(self.weyl_table.get_or_init(|| weyl_shift_table(&self.rs, g)))
    }

    pub fn zgroup_table(&self) -> &SignedShiftTable {
        self.zgroup_table.get_or_init(|| zgroup_shift_table(&self.rs))
    }

    fn check_degree(&self) -> Result<()> {
        let degree = self.rs.positive_roots().len();
        if degree > self.max_degree {
            return Err(Error::PolynomialTooLarge { degree, max: self.max_degree });
        }
        Ok(())
    }

    pub fn dim_polynomial(&self) -> Result<&Poly> {
        self.check_degree()?;
        Ok(self.dim_poly.get_or_init(|| dim_polynomial(&self.rs)))
    }

    pub fn layer_polynomial(&self) -> Result<&LayerPolynomial> {
        let d = self.dim_polynomial()?;
        Ok(self.layer_poly.get_or_init(|| layer_polynomial_from(&self.rs, d)))
    }

    /// Check a label vector against the rank.
    pub fn check_arity(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::Arity { weight: w.clone(), got: w.rank(), rank: self.rank() })
        }
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_arity(w)?;
        if w.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(w.clone()))
        }
    }
}
