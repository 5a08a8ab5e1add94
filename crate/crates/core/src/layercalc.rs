//! The dimension polynomial `D`, signed shift tables, the layer polynomial
//! `R` and the brute-force weight count.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::charcalc::dominant_weights_below;
use crate::rootsystem::RootSystem;
use crate::weight::Weight;
use crate::weylgroup::{orbit_size, GroupTable};
use crate::Poly;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Coefficients of `<alpha, .>` on the labels: `c_i(alpha) d_i`.
fn root_form(rs: &RootSystem, coeffs: &[i64]) -> Vec<i64> {
    coeffs.iter().zip(rs.symmetrizers()).map(|(c, d)| c * d).collect()
}

/// Weyl's dimension formula as an expanded polynomial in the Dynkin labels.
pub fn dim_polynomial(rs: &RootSystem) -> Poly {
    let r = rs.rank();
    let mut numer = Poly::one(r);
    let mut denom = BigInt::one();
    for alpha in rs.positive_roots() {
        let form = root_form(rs, &alpha.coeffs);
        let at_rho: i64 = form.iter().sum();
        let factor = Poly::linear(int(at_rho), &form.iter().map(|&f| int(f)).collect::<Vec<_>>());
        numer = &numer * &factor;
        denom *= at_rho;
    }
    numer.scale(&BigRational::new(BigInt::one(), denom))
}

/// `D` evaluated from its product form at an arbitrary rational point.
pub fn dim_value(rs: &RootSystem, point: &[BigRational]) -> BigRational {
    let mut num = BigRational::one();
    let mut den = BigInt::one();
    for alpha in rs.positive_roots() {
        let form = root_form(rs, &alpha.coeffs);
        let at_rho: i64 = form.iter().sum();
        let v = form.iter().zip(point).fold(int(at_rho), |acc, (&f, x)| acc + int(f) * x);
        num *= v;
        den *= at_rho;
    }
    num / BigRational::from_integer(den)
}

/// `D` at an integral weight, from the product form (exact integer arithmetic).
pub fn dim_at(rs: &RootSystem, w: &Weight) -> BigRational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in rs.positive_roots() {
        let form = root_form(rs, &alpha.coeffs);
        let at_rho: i64 = form.iter().sum();
        let v: i64 = at_rho + form.iter().zip(w.labels()).map(|(f, x)| f * x).sum::<i64>();
        if v == 0 {
            return BigRational::zero();
        }
        num *= v;
        den *= at_rho;
    }
    BigRational::new(num, den)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum GroupKind {
    /// The elementary abelian group generated by the non-simple positive roots.
    ZGroup,
    WeylGroup,
}

/// Signed counts of shift vectors (in Dynkin labels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedShiftTable {
    pub kind: GroupKind,
    pub entries: BTreeMap<Weight, i64>,
    /// Shift of the longest element: `-2 rho'` or `-2 rho`.
    pub total_shift: Weight,
}

impl SignedShiftTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count_sum(&self) -> i64 {
        self.entries.values().sum()
    }

    /// Whether `entry(s) = (-1)^parity entry(total_shift - s)` for every `s`.
    pub fn is_paired(&self, parity: usize) -> bool {
        let sign = if parity.is_multiple_of(2) { 1 } else { -1 };
        self.entries.iter().all(|(s, c)| {
            let partner = &self.total_shift - s;
            self.entries.get(&partner).copied().unwrap_or(0) * sign == *c
        })
    }

    /// `sum_s count(s) * p(x + s)`, summed literally over the table.
    pub fn apply_to(&self, p: &Poly) -> Poly {
        let mut acc = Poly::zero(p.nvars());
        for (s, &c) in &self.entries {
            let v: Vec<BigRational> = s.labels().iter().map(|&x| int(x)).collect();
            acc = &acc + &p.shift(&v).scale(&int(c));
        }
        acc
    }
}

fn convolve(a: &BTreeMap<Weight, i64>, b: &BTreeMap<Weight, i64>) -> BTreeMap<Weight, i64> {
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for (sa, ca) in a {
        for (sb, cb) in b {
            *out.entry(sa + sb).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn convolve_all(leaves: &[BTreeMap<Weight, i64>], rank: usize) -> BTreeMap<Weight, i64> {
    match leaves.len() {
        0 => BTreeMap::from([(Weight::zero(rank), 1)]),
        1 => leaves[0].clone(),
        n => {
            let (l, r) = leaves.split_at(n / 2);
            convolve(&convolve_all(l, rank), &convolve_all(r, rank))
        }
    }
}

/// Signed subset sums `(-1)^|S|` at `-sum_{alpha in S} alpha` over subsets of
/// the non-simple positive roots, aggregated by divide-and-conquer convolution.
pub fn zgroup_shift_table(rs: &RootSystem) -> SignedShiftTable {
    let r = rs.rank();
    let leaves: Vec<BTreeMap<Weight, i64>> =
        rs.nonsimple_positive_roots().map(|a| BTreeMap::from([(Weight::zero(r), 1), (-&a.labels, -1)])).collect();
    let total = rs.nonsimple_positive_roots().fold(Weight::zero(r), |acc, a| &acc - &a.labels);
    SignedShiftTable { kind: GroupKind::ZGroup, entries: convolve_all(&leaves, r), total_shift: total }
}

/// Signed counts of `w(rho) - rho` over the Weyl group.
pub fn weyl_shift_table(rs: &RootSystem, group: &GroupTable) -> SignedShiftTable {
    let mut entries: BTreeMap<Weight, i64> = BTreeMap::new();
    for g in group.elements() {
        *entries.entry(g.shift()).or_insert(0) += g.sign();
    }
    entries.retain(|_, c| *c != 0);
    SignedShiftTable { kind: GroupKind::WeylGroup, entries, total_shift: rs.rho().scaled(-2) }
}

/// Shape of a computed layer polynomial against the expected degree,
/// term count and coefficient signs. Deviations are reported, not fatal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerPolyReport {
    pub degree: u32,
    pub expected_degree: u32,
    pub term_count: usize,
    pub expected_term_count: u64,
    pub all_positive: bool,
}

impl LayerPolyReport {
    pub fn conforms(&self) -> bool {
        self.degree == self.expected_degree && self.term_count as u64 == self.expected_term_count && self.all_positive
    }
}

#[derive(Clone, Debug)]
pub struct LayerPolynomial {
    pub poly: Poly,
    pub report: LayerPolyReport,
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `R = sum_z (-1)^l(z) D(x + z.0)`.
///
/// The Z2^k sum factors as a product of commuting difference operators
/// `p -> p(x) - p(x - alpha)`, one per non-simple positive root; applying them
/// in turn equals summing `D` over every entry of [`zgroup_shift_table`]
/// without materializing the table.
pub fn layer_polynomial(rs: &RootSystem) -> LayerPolynomial {
    layer_polynomial_from(rs, &dim_polynomial(rs))
}

pub fn layer_polynomial_from(rs: &RootSystem, d: &Poly) -> LayerPolynomial {
    let mut p = d.clone();
    for alpha in rs.nonsimple_positive_roots() {
        let v: Vec<BigRational> = alpha.labels.labels().iter().map(|&x| int(-x)).collect();
        p = &p - &p.shift(&v);
    }
    let r = rs.rank() as u64;
    let report = LayerPolyReport {
        degree: p.degree().unwrap_or(0),
        expected_degree: r as u32,
        term_count: p.num_terms(),
        expected_term_count: binomial(2 * r, r),
        all_positive: p.terms().all(|(_, c)| c.is_positive()),
    };
    LayerPolynomial { poly: p, report }
}

/// `sum_w (-1)^l(w) D(lambda + w.0)`; expected to equal `|W|` for every lambda.
pub fn weyl_alternating_dim_sum(rs: &RootSystem, lambda: &Weight, group: &GroupTable) -> BigRational {
    group
        .elements()
        .iter()
        .map(|g| dim_at(rs, &(lambda + &g.shift())) * int(g.sign()))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// `|P(lambda)|` as the orbit-length weighted count of `P_+(lambda)`.
pub fn count_weights_bruteforce(rs: &RootSystem, lambda: &Weight) -> u64 {
    dominant_weights_below(rs, lambda).iter().map(|mu| orbit_size(rs, mu) as u64).sum()
}
