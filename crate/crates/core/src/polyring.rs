//! Sparse multivariate polynomials over a generic coefficient ring.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors under graded
//! lexicographic order (total degree ascending, then larger leading
//! exponents first), which is also the serialization order. Zero
//! coefficients are never stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{rational_from_str, rational_to_string, Scalar};

/// Exponent vector of a monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<T> {
    nvars: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> MultiPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, T::one())
    }

    /// The polynomial `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(e), T::one());
        p
    }

    /// `c_0 + sum_i c_i x_i`.
    pub fn linear(constant: T, coeffs: &[T]) -> Self {
        let n = coeffs.len();
        let mut p = Self::constant(n, constant);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, T)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let sum = old.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> T {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(T::zero)
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::VarMismatch(self.nvars, other.nvars))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(e), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())).collect(),
        }
    }

    /// `p(x_1 + v_1, ..., x_r + v_r)`, expanded exactly.
    ///
    /// Done one variable at a time (a Taylor shift per variable), which keeps
    /// the work linear in the number of terms times the degree.
    pub fn shift(&self, v: &[T]) -> Self {
        assert_eq!(v.len(), self.nvars, "shift vector length");
        let mut p = self.clone();
        for (i, vi) in v.iter().enumerate() {
            if !vi.is_zero() {
                p = p.shift_var(i, vi);
            }
        }
        p
    }

    fn shift_var(&self, var: usize, v: &T) -> Self {
        let max_e = self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0) as usize;
        let mut pow = vec![T::one()];
        for k in 1..=max_e {
            pow.push(pow[k - 1].clone() * v.clone());
        }
        // binomial rows C(e, j) for e <= max_e
        let mut binom: Vec<Vec<T>> = vec![vec![T::one()]];
        for e in 1..=max_e {
            let prev = &binom[e - 1];
            let mut row = vec![T::one(); e + 1];
            for j in 1..e {
                row[j] = prev[j - 1].clone() + prev[j].clone();
            }
            binom.push(row);
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            for j in 0..=e {
                let mut exps = m.0.clone();
                exps[var] = j as u32;
                out.add_term(Monomial(exps), c.clone() * binom[e][j].clone() * pow[e - j].clone());
            }
        }
        out
    }

    /// Exact evaluation at `point`.
    pub fn eval(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.nvars, "evaluation point length");
        let max_e: Vec<u32> = (0..self.nvars).map(|i| self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)).collect();
        let powers: Vec<Vec<T>> = point
            .iter()
            .zip(&max_e)
            .map(|(x, &e)| {
                let mut v = vec![T::one()];
                for k in 1..=e as usize {
                    v.push(v[k - 1].clone() * x.clone());
                }
                v
            })
            .collect();
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t * powers[i][e as usize].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Evaluation at an integer point.
    pub fn eval_int(&self, point: &[i64]) -> T {
        let p: Vec<T> = point.iter().map(|&x| T::from_int(x)).collect();
        self.eval(&p)
    }

    /// Plain-text rendering in graded-lex order, variables named `l1, l2, ...`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let raw = c.to_string();
            let (neg, mag) = match raw.strip_prefix('-') {
                Some(r) => (true, r.to_string()),
                None => (false, raw),
            };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let vars = monomial_text(m);
            match (vars.is_empty(), mag == "1") {
                (true, _) => s.push_str(&mag),
                (false, true) => s.push_str(&vars),
                (false, false) => {
                    s.push_str(&mag);
                    s.push('*');
                    s.push_str(&vars);
                }
            }
        }
        s
    }
}

fn monomial_text(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("l{}", i + 1)),
            _ => parts.push(format!("l{}^{}", i + 1, e)),
        }
    }
    parts.join("*")
}

impl<T: Scalar> fmt::Display for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<T: Scalar> Add for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    /// Panics on mismatched variable counts; see [`MultiPoly::checked_add`].
    fn add(self, rhs: Self) -> MultiPoly<T> {
        self.checked_add(rhs).expect("matching variable counts")
    }
}

impl<T: Scalar> Sub for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn sub(self, rhs: Self) -> MultiPoly<T> {
        self.checked_sub(rhs).expect("matching variable counts")
    }
}

impl<T: Scalar> Mul for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn mul(self, rhs: Self) -> MultiPoly<T> {
        self.checked_mul(rhs).expect("matching variable counts")
    }
}

impl<T: Scalar> Neg for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn neg(self) -> MultiPoly<T> {
        self.scale(&-T::one())
    }
}

/// JSON form: `{"vars": r, "terms": [{"exp": [...], "coef": "p/q"}, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub vars: usize,
    pub terms: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub exp: Vec<u32>,
    pub coef: String,
}

impl MultiPoly<BigRational> {
    pub fn to_doc(&self) -> PolyDoc {
        PolyDoc {
            vars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| TermDoc { exp: m.0.clone(), coef: rational_to_string(c) }).collect(),
        }
    }

    pub fn from_doc(doc: &PolyDoc) -> Option<Self> {
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in &doc.terms {
            if t.exp.len() != doc.vars {
                return None;
            }
            terms.push((t.exp.clone(), rational_from_str(&t.coef)?));
        }
        Some(Self::from_terms(doc.vars, terms))
    }

    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                s.push_str(if idx == 0 { "-" } else { " - " });
            } else if idx > 0 {
                s.push_str(" + ");
            }
            let a = c.abs();
            let vars: String =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("\\lambda_{{{}}}", i + 1)
                        } else {
                            format!("\\lambda_{{{}}}^{{{}}}", i + 1, e)
                        }
                    })
                    .collect();
            let coef = if a.is_integer() {
                if a.is_one() && !vars.is_empty() {
                    String::new()
                } else {
                    a.numer().to_string()
                }
            } else {
                format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
            };
            s.push_str(&coef);
            s.push_str(&vars);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;
    use proptest::prelude::*;

    type P = MultiPoly<BigRational>;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn x(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    #[test]
    fn difference_of_squares() {
        let one = P::one(1);
        let p = &(&x(1, 0) + &one) * &(&x(1, 0) - &one);
        assert_eq!(p, P::from_terms(1, [(vec![2], q(1, 1)), (vec![0], q(-1, 1))]));
    }

    #[test]
    fn additive_identity_and_scaling() {
        let p = P::from_terms(2, [(vec![1, 1], q(2, 1)), (vec![0, 3], q(-5, 7))]);
        assert_eq!(&p + &P::zero(2), p);
        let half = P::from_terms(2, [(vec![1, 1], q(2, 1))]).scale(&q(1, 2));
        assert_eq!(half, P::from_terms(2, [(vec![1, 1], q(1, 1))]));
        assert!(p.scale(&q(0, 1)).is_zero());
    }

    #[test]
    fn mismatched_vars_rejected() {
        assert!(matches!(x(1, 0).checked_add(&x(2, 0)), Err(Error::VarMismatch(1, 2))));
        assert!(x(3, 0).checked_mul(&x(2, 0)).is_err());
    }

    #[test]
    fn shift_examples() {
        let sq = &x(1, 0) * &x(1, 0);
        assert_eq!(
            sq.shift(&[q(1, 1)]),
            P::from_terms(1, [(vec![2], q(1, 1)), (vec![1], q(2, 1)), (vec![0], q(1, 1))])
        );
        assert_eq!(sq.shift(&[q(0, 1)]), sq);
        let xy = &x(2, 0) * &x(2, 1);
        let expect = P::from_terms(
            2,
            [(vec![1, 1], q(1, 1)), (vec![1, 0], q(-1, 1)), (vec![0, 1], q(-1, 1)), (vec![0, 0], q(1, 1))],
        );
        assert_eq!(xy.shift(&[q(-1, 1), q(-1, 1)]), expect);
    }

    #[test]
    fn eval_constant_term_at_origin() {
        let p = P::from_terms(2, [(vec![1, 1], q(2, 1)), (vec![0, 0], q(-5, 7))]);
        assert_eq!(p.eval_int(&[0, 0]), q(-5, 7));
        assert_eq!(p.eval_int(&[2, 3]), q(12, 1) - q(5, 7));
    }

    #[test]
    fn text_and_latex() {
        let p = P::from_terms(
            2,
            [(vec![0, 0], q(1, 1)), (vec![1, 0], q(3, 2)), (vec![0, 2], q(-1, 2)), (vec![1, 1], q(1, 1))],
        );
        assert_eq!(p.to_text(), "1 + 3/2*l1 + l1*l2 - 1/2*l2^2");
        assert_eq!(
            p.to_latex(),
            "1 + \\frac{3}{2}\\lambda_{1} + \\lambda_{1}\\lambda_{2} - \\frac{1}{2}\\lambda_{2}^{2}"
        );
        assert_eq!(P::zero(3).to_text(), "0");
    }

    #[test]
    fn works_over_small_rationals_and_floats() {
        let p = MultiPoly::<Ratio<i64>>::linear(Ratio::new(1, 2), &[Ratio::from_integer(3)]);
        assert_eq!(p.eval_int(&[2]), Ratio::new(13, 2));
        let f = MultiPoly::<f64>::linear(0.5, &[3.0, -1.0]);
        assert_eq!((&f * &f).eval(&[1.0, 2.0]), 2.25);
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = P> {
        prop::collection::vec((prop::collection::vec(0u32..3, nvars), -4i64..5, 1i64..4), 0..5)
            .prop_map(move |ts| P::from_terms(nvars, ts.into_iter().map(|(e, n, d)| (e, q(n, d)))))
    }

    fn arb_vec(n: usize) -> impl Strategy<Value = Vec<BigRational>> {
        prop::collection::vec((-3i64..4, 1i64..3).prop_map(|(n, d)| q(n, d)), n)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn shifts_compose(p in arb_poly(3), u in arb_vec(3), v in arb_vec(3)) {
            let uv: Vec<BigRational> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
            prop_assert_eq!(p.shift(&u).shift(&v), p.shift(&uv));
        }

        #[test]
        fn shift_matches_eval(p in arb_poly(3), v in arb_vec(3), x in arb_vec(3)) {
            let xv: Vec<BigRational> = x.iter().zip(&v).map(|(a, b)| a + b).collect();
            prop_assert_eq!(p.shift(&v).eval(&x), p.eval(&xv));
        }

        #[test]
        fn json_round_trip(p in arb_poly(3)) {
            let doc = p.to_doc();
            let text = serde_json::to_string(&doc).unwrap();
            let back: PolyDoc = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(P::from_doc(&back).unwrap(), p);
        }
    }
}
