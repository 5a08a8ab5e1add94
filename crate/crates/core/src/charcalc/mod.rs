//! Characters from orbit sums and layer sums.
//!
//! Dominant weights are ordered by their layer-polynomial value. In that
//! order the orbit-sum and layer-sum expansions form unit lower-triangular
//! integer matrices whose inverses give weight multiplicities and layer
//! decompositions. Every conjectural step is checked as it happens and a
//! failure is reported as a [`Counterexample`](crate::Counterexample).

mod verify;

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::layercalc::SignedShiftTable;
use crate::matrix::{ShapeError, UnitriangularMatrix};
use crate::rootsystem::RootSystem;
use crate::weight::Weight;
use crate::weylgroup::{dominantize, orbit_size, shifted_resolve, AuxResolution};
use crate::Poly;

pub use verify::{
    verify_bound, verify_identities, verify_upto, BuildFailure, Check, CheckResult, CheckStatus, Tables, VerifyReport,
};

/// Finitely supported integer combination of dominant weights.
///
/// Used both for characters in a basis of orbit or layer sums (non-negative
/// coefficients) and for the signed rows of the inverse matrices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Expansion {
    coeffs: BTreeMap<Weight, i64>,
}

pub type DominantExpansion = Expansion;
pub type SignedCharCombo = Expansion;

impl Expansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Weight, i64)>>(pairs: I) -> Self {
        let mut e = Self::new();
        for (w, c) in pairs {
            e.add(w, c);
        }
        e
    }

    pub fn add(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        match self.coeffs.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.coeffs.keys()
    }

    /// Document form with weights listed in descending position of `order`
    /// (weights missing from `order` go last, lexicographically).
    pub fn to_doc(&self, order: Option<&OrderedWeightList>) -> ExpansionDoc {
        let mut pairs: Vec<(&Weight, &i64)> = self.coeffs.iter().collect();
        if let Some(o) = order {
            pairs.sort_by(|a, b| match (o.position(a.0), o.position(b.0)) {
                (Some(x), Some(y)) => y.cmp(&x),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => a.0.cmp(b.0),
            });
        }
        ExpansionDoc {
            weights: pairs.iter().map(|(w, _)| w.labels().to_vec()).collect(),
            coeffs: pairs.iter().map(|(_, c)| **c).collect(),
        }
    }
}

/// `{"weights": [[labels]], "coeffs": [int]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionDoc {
    pub weights: Vec<Vec<i64>>,
    pub coeffs: Vec<i64>,
}

/// `P_+(lambda)`: dominant `mu` with `lambda - mu` in the non-negative root lattice.
///
/// Walks `mu = lambda - sum n_i alpha_i` over the box `0 <= n_i <= c_i(lambda)`
/// (a dominant `mu` has non-negative root coordinates, so nothing outside the
/// box can qualify) and keeps the dominant points.
pub fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> BTreeSet<Weight> {
    let r = rs.rank();
    let bounds: Vec<i64> =
        rs.to_root_basis(lambda).iter().map(|c| c.floor().to_integer().to_i64().unwrap_or(0)).collect();
    let cols: Vec<Weight> = (0..r).map(|i| rs.simple_root(i)).collect();
    let mut out = BTreeSet::new();
    if bounds.iter().any(|&b| b < 0) {
        return out;
    }
    let mut n = vec![0i64; r];
    let mut cur = lambda.clone();
    loop {
        if cur.is_dominant() {
            out.insert(cur.clone());
        }
        // odometer step over the box
        let mut i = 0;
        loop {
            if i == r {
                return out;
            }
            if n[i] < bounds[i] {
                n[i] += 1;
                cur = &cur - &cols[i];
                break;
            }
            cur = &cur + &cols[i].scaled(n[i]);
            n[i] = 0;
            i += 1;
        }
    }
}

/// Dominant weights sorted by layer-polynomial value.
///
/// Ties (weights with equal `R`) are ordered with lexicographically larger
/// Dynkin labels first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedWeightList {
    weights: Vec<Weight>,
    r_values: Vec<BigRational>,
    index: HashMap<Weight, usize>,
}

impl OrderedWeightList {
    pub fn from_sorted(pairs: Vec<(Weight, BigRational)>) -> Self {
        let index = pairs.iter().enumerate().map(|(i, (w, _))| (w.clone(), i)).collect();
        let (weights, r_values) = pairs.into_iter().unzip();
        OrderedWeightList { weights, r_values, index }
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn r_values(&self) -> &[BigRational] {
        &self.r_values
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn position(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// The first `n` entries.
    pub fn prefix(&self, n: usize) -> Self {
        Self::from_sorted(self.weights[..n].iter().cloned().zip(self.r_values[..n].iter().cloned()).collect())
    }

    /// Reorder by an explicit permutation (used to test tie-break independence).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self::from_sorted(perm.iter().map(|&i| (self.weights[i].clone(), self.r_values[i].clone())).collect())
    }
}

fn tie_break(a: &Weight, b: &Weight) -> Ordering {
    b.cmp(a)
}

/// All dominant weights with `R(mu) <= bound`, sorted.
pub fn ordered_by_bound(rs: &RootSystem, layer: &Poly, bound: &BigRational) -> Result<OrderedWeightList> {
    let r = rs.rank();
    // Monotonicity in every label needs all coefficients positive.
    if layer.terms().any(|(_, c)| !c.is_positive()) {
        return Err(Error::UnboundedOrdering);
    }
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = 1;
        if !layer.coeff(&e).is_positive() {
            return Err(Error::UnboundedOrdering);
        }
    }
    let mut found = Vec::new();
    let mut point = vec![0i64; r];
    collect_bounded(layer, bound, &mut point, 0, &mut found);
    found.sort_by(|(wa, ra): &(Weight, BigRational), (wb, rb)| ra.cmp(rb).then_with(|| tie_break(wa, wb)));
    Ok(OrderedWeightList::from_sorted(found))
}

fn collect_bounded(
    layer: &Poly,
    bound: &BigRational,
    point: &mut Vec<i64>,
    i: usize,
    out: &mut Vec<(Weight, BigRational)>,
) {
    if i == point.len() {
        let v = layer.eval_int(point);
        if &v <= bound {
            out.push((Weight::new(point.clone()), v));
        }
        return;
    }
    loop {
        // R is increasing in each label, so the rest-at-zero value bounds the subtree.
        if &layer.eval_int(point) > bound {
            break;
        }
        collect_bounded(layer, bound, point, i + 1, out);
        point[i] += 1;
    }
    point[i] = 0;
}

/// `O_lambda`: every dominant `mu` with `R(mu) <= R(lambda)`, in order.
pub fn ordered_upto(alg: &Algebra, lambda: &Weight) -> Result<OrderedWeightList> {
    alg.check_dominant(lambda)?;
    let layer = &alg.layer_polynomial()?.poly;
    ordered_by_bound(alg.root_system(), layer, &layer.eval_int(lambda.labels()))
}

/// Orbit sum `m_lambda` as an integer combination of (auxiliary) characters:
/// `|O_lambda| / |W| * sum_w (-1)^l(w) ch_{lambda + w.0}`.
pub fn orbit_sum_expansion(rs: &RootSystem, lambda: &Weight, weyl_table: &SignedShiftTable) -> Result<SignedCharCombo> {
    let raw = resolve_table(rs, lambda, weyl_table);
    let orbit = orbit_size(rs, lambda) as i64;
    let order = rs.lie_type().weyl_group_order() as i64;
    let mut out = Expansion::new();
    for (w, c) in raw.iter() {
        let num = c * orbit;
        if num % order != 0 {
            return Err(Error::counterexample(
                "orbit-sum integrality",
                lambda,
                format!("coefficient of ch{w} is {c}*{orbit}/{order}"),
            ));
        }
        out.add(w.clone(), num / order);
    }
    if out.coeff(lambda) != 1 {
        return Err(Error::counterexample(
            "orbit-sum unit diagonal",
            lambda,
            format!("coefficient of ch{lambda} is {}", out.coeff(lambda)),
        ));
    }
    Ok(out)
}

/// Layer sum `L_lambda = sum_z (-1)^l(z) ch_{lambda + z.0}` over the Z2^k table.
pub fn layer_sum_expansion(rs: &RootSystem, lambda: &Weight, zgroup_table: &SignedShiftTable) -> SignedCharCombo {
    resolve_table(rs, lambda, zgroup_table)
}

fn resolve_table(rs: &RootSystem, lambda: &Weight, table: &SignedShiftTable) -> Expansion {
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (shift, count) in &table.entries {
        if let AuxResolution::Signed { sign, dominant } = shifted_resolve(rs, &(lambda + shift)) {
            *acc.entry(dominant).or_insert(0) += sign * count;
        }
    }
    Expansion::from_pairs(acc)
}

/// Unit lower-triangular matrix with rows and columns labelled by an ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMatrix {
    pub order: OrderedWeightList,
    pub matrix: UnitriangularMatrix<i64>,
}

/// `{"order": [[labels]], "rows": [[int]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub order: Vec<Vec<i64>>,
    pub rows: Vec<Vec<i64>>,
}

impl WeightMatrix {
    /// Assemble from one expansion per weight of `order`; each row must be
    /// supported on earlier-or-equal weights with coefficient 1 on its own.
    pub fn from_rows(order: &OrderedWeightList, rows: &[Expansion], identity: &str) -> Result<Self> {
        let n = order.len();
        let mut square = vec![vec![0i64; n]; n];
        for (i, (row, lambda)) in rows.iter().zip(order.weights()).enumerate() {
            for (w, &c) in row.iter() {
                match order.position(w) {
                    Some(j) => square[i][j] = c,
                    None => {
                        return Err(Error::counterexample(
                            identity,
                            lambda,
                            format!("term {c}*ch{w} lies beyond the ordering"),
                        ))
                    }
                }
            }
        }
        let matrix = UnitriangularMatrix::from_square(square).map_err(|e| {
            let (row, what) = match e {
                ShapeError::AboveDiagonal { row, col } => {
                    (row, format!("nonzero entry at later weight {}", order.weights()[col]))
                }
                ShapeError::Diagonal { row } => (row, "diagonal entry is not 1".to_string()),
                ShapeError::NotSquare => (0, "matrix is not square".to_string()),
            };
            Error::counterexample(identity, &order.weights()[row], what)
        })?;
        Ok(WeightMatrix { order: order.clone(), matrix })
    }

    pub fn inverse(&self) -> Self {
        WeightMatrix { order: self.order.clone(), matrix: self.matrix.inverse() }
    }

    pub fn row_expansion(&self, i: usize) -> Expansion {
        Expansion::from_pairs(self.order.weights().iter().cloned().zip(self.matrix.row(i)))
    }

    pub fn to_doc(&self) -> MatrixDoc {
        MatrixDoc {
            order: self.order.weights().iter().map(|w| w.labels().to_vec()).collect(),
            rows: self.matrix.to_square(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        let header: Vec<String> = self.order.weights().iter().map(|w| format!("\"{w}\"")).collect();
        s.push_str("weight,");
        s.push_str(&header.join(","));
        s.push('\n');
        for (i, w) in self.order.weights().iter().enumerate() {
            let row: Vec<String> = self.matrix.row(i).iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("\"{w}\",{}\n", row.join(",")));
        }
        s
    }
}

/// `M^{-1}` over `order`: rows are orbit-sum expansions.
pub fn orbit_sum_matrix(alg: &Algebra, order: &OrderedWeightList) -> Result<WeightMatrix> {
    let table = alg.weyl_table()?;
    let rows =
        order.weights().iter().map(|w| orbit_sum_expansion(alg.root_system(), w, table)).collect::<Result<Vec<_>>>()?;
    WeightMatrix::from_rows(order, &rows, "orbit-sum unitriangularity")
}

/// `C^{-1}` over `order`: rows are layer-sum expansions.
pub fn layer_sum_matrix(alg: &Algebra, order: &OrderedWeightList) -> Result<WeightMatrix> {
    let table = alg.zgroup_table();
    let rows: Vec<Expansion> =
        order.weights().iter().map(|w| layer_sum_expansion(alg.root_system(), w, table)).collect();
    WeightMatrix::from_rows(order, &rows, "layer-sum unitriangularity")
}

/// `D_{lambda,mu} = 1` iff `mu` is in `P_+(lambda)`.
pub fn dominance_matrix(rs: &RootSystem, order: &OrderedWeightList) -> Result<WeightMatrix> {
    let rows: Vec<Expansion> = order
        .weights()
        .iter()
        .map(|l| {
            Expansion::from_pairs(order.weights().iter().filter(|m| rs.dominated_by(m, l)).map(|m| (m.clone(), 1)))
        })
        .collect();
    WeightMatrix::from_rows(order, &rows, "dominance order refines R order")
}

/// `ch_lambda = sum_mu m_{lambda,mu} m_mu`, read off the inverse of `M^{-1}`.
pub fn character_in_orbit_basis(alg: &Algebra, lambda: &Weight) -> Result<DominantExpansion> {
    alg.weyl_table()?;
    let order = ordered_upto(alg, lambda)?;
    let m = orbit_sum_matrix(alg, &order)?.inverse();
    let row = m.row_expansion(order.position(lambda).expect("lambda is in its own ordering"));
    if let Some((w, c)) = row.iter().find(|(_, &c)| c < 0) {
        return Err(Error::counterexample("multiplicity non-negativity", lambda, format!("m at {w} is {c}")));
    }
    Ok(row)
}

/// `ch_lambda = sum_mu c_{lambda,mu} L_mu`, read off the inverse of `C^{-1}`.
pub fn layer_decomposition(alg: &Algebra, lambda: &Weight) -> Result<DominantExpansion> {
    let order = ordered_upto(alg, lambda)?;
    let c = layer_sum_matrix(alg, &order)?.inverse();
    let row = c.row_expansion(order.position(lambda).expect("lambda is in its own ordering"));
    check_layer_row(alg.root_system(), lambda, &row)?;
    Ok(row)
}

fn check_layer_row(rs: &RootSystem, lambda: &Weight, row: &Expansion) -> Result<()> {
    for (w, &c) in row.iter() {
        if c < 0 {
            return Err(Error::counterexample(
                "layer-decomposition non-negativity",
                lambda,
                format!("c at {w} is {c}"),
            ));
        }
        if !rs.dominated_by(w, lambda) {
            return Err(Error::counterexample(
                "layer-decomposition support",
                lambda,
                format!("{w} is not in P+({lambda})"),
            ));
        }
    }
    Ok(())
}

/// Weight multiplicities of `L(lambda)` at its dominant weights, by the
/// Freudenthal recursion
/// `((l+rho,l+rho) - (mu+rho,mu+rho)) m_mu = 2 sum_{a>0} sum_{j>=1} (mu+j a, a) m_{mu+j a}`.
pub fn freudenthal_multiplicities(rs: &RootSystem, lambda: &Weight) -> DominantExpansion {
    let r = rs.rank();
    let d = rs.symmetrizers();
    // (alpha, nu) = sum_i c_i(alpha) d_i nu_i
    let forms: Vec<(Weight, Vec<i64>)> = rs
        .positive_roots()
        .iter()
        .map(|a| (a.labels.clone(), a.coeffs.iter().zip(d).map(|(c, d)| c * d).collect()))
        .collect();
    let depth = |mu: &Weight| -> Vec<i64> {
        rs.to_root_basis(&(lambda - mu)).iter().map(|c| c.to_integer().to_i64().expect("integral")).collect()
    };
    let mut weights: Vec<(Weight, Vec<i64>)> = dominant_weights_below(rs, lambda)
        .into_iter()
        .map(|m| {
            let n = depth(&m);
            (m, n)
        })
        .collect();
    weights.sort_by_key(|(_, n)| n.iter().sum::<i64>());

    let mut mult: HashMap<Weight, i128> = HashMap::new();
    for (mu, n) in &weights {
        if mu == lambda {
            mult.insert(mu.clone(), 1);
            continue;
        }
        // (l+rho,l+rho) - (mu+rho,mu+rho) = (l - mu, l + mu + 2 rho)
        let lhs: i128 = (0..r).map(|i| (n[i] * d[i] * (lambda.labels()[i] + mu.labels()[i] + 2)) as i128).sum();
        let mut rhs: i128 = 0;
        for (alpha, form) in &forms {
            let mut nu = mu + alpha;
            while let Some(&m) = mult.get(&dominantize(rs, &nu).0) {
                let ip: i64 = form.iter().zip(nu.labels()).map(|(f, x)| f * x).sum();
                rhs += ip as i128 * m;
                nu = &nu + alpha;
            }
        }
        assert!(lhs > 0, "Freudenthal denominator vanishes at {mu}");
        assert_eq!((2 * rhs) % lhs, 0, "non-integral multiplicity at {mu}");
        mult.insert(mu.clone(), 2 * rhs / lhs);
    }
    Expansion::from_pairs(mult.into_iter().map(|(w, m)| (w, i64::try_from(m).expect("multiplicity fits in i64"))))
}
