//! Static data of a simple root system: Cartan matrix, positive roots,
//! symmetrizers, Weyl vector and reduced Weyl vector.
//!
//! Conventions: `A[i][j] = <alpha_i^vee, alpha_j>`, so the Dynkin labels of
//! the simple root `alpha_j` form column `j` of the Cartan matrix. Node
//! numbering follows the usual diagrams with the double bond of `B_r` pointing
//! at the short node `r`, `C_r` having the long node `r`, `F_4` with
//! `alpha_1, alpha_2` long and `G_2` with `alpha_1` long. `E_r` uses Bourbaki
//! numbering (node 2 attached to node 4).

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::weight::{RationalWeight, Weight};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// Identity of a simple complex Lie algebra: Cartan series plus rank.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(LieType { series, rank })
        } else {
            Err(Error::Inadmissible { series: series.letter(), rank })
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Classical order of the Weyl group.
    pub fn weyl_group_order(&self) -> u64 {
        let r = self.rank as u64;
        let fact = |n: u64| (1..=n).product::<u64>();
        match self.series {
            Series::A => fact(r + 1),
            Series::B | Series::C => (1u64 << r) * fact(r),
            Series::D => (1u64 << (r - 1)) * fact(r),
            Series::E => match r {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Series::F => 1152,
            Series::G => 12,
        }
    }

    /// Classical number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let r = self.rank;
        match self.series {
            Series::A => r * (r + 1) / 2,
            Series::B | Series::C => r * r,
            Series::D => r * (r - 1),
            Series::E => match r {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }

    /// Cartan matrix `A[i][j] = <alpha_i^vee, alpha_j>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut a = vec![vec![0i64; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.series {
            Series::A => (0..r - 1).for_each(|i| bond(i, i + 1, -1, -1)),
            Series::B => {
                (0..r - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(r - 2, r - 1, -1, -2);
            }
            Series::C => {
                (0..r - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(r - 2, r - 1, -2, -1);
            }
            Series::D => {
                (0..r - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(r - 3, r - 1, -1, -1);
            }
            Series::E => {
                bond(0, 2, -1, -1);
                bond(1, 3, -1, -1);
                (2..r - 1).for_each(|i| bond(i, i + 1, -1, -1));
            }
            Series::F => {
                bond(0, 1, -1, -1);
                bond(1, 2, -1, -2);
                bond(2, 3, -1, -1);
            }
            Series::G => bond(0, 1, -1, -3),
        }
        a
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Letter followed by rank, case-insensitive: `"G2"`, `"b3"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let bad = || Error::BadAlgebraToken(s.to_string());
        let series = chars.next().and_then(Series::from_letter).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        LieType::new(series, rank)
    }
}

/// A positive (or simple) root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Root {
    /// Coefficients over the simple roots.
    pub coeffs: Vec<i64>,
    /// Dynkin labels, `labels = A * coeffs`.
    pub labels: Weight,
    pub is_simple: bool,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// All static data of a simple root system. Immutable after construction.
#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    cartan_inverse: Vec<Vec<BigRational>>,
    positive_roots: Vec<Root>,
    symmetrizers: Vec<i64>,
    rho_prime: RationalWeight,
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Self {
        let cartan = lie_type.cartan_matrix();
        let cartan_inverse = invert_integer_matrix(&cartan);
        let symmetrizers = symmetrizers(&cartan);
        let positive_roots = positive_roots(&cartan);
        let r = lie_type.rank();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        // rho' = sum_i (omega_i - alpha_i / 2)
        let rho_prime = RationalWeight(
            (0..r)
                .map(|i| {
                    let row: i64 = cartan[i].iter().sum();
                    BigRational::one() - &half * BigRational::from_integer(row.into())
                })
                .collect(),
        );
        RootSystem { lie_type, cartan, cartan_inverse, positive_roots, symmetrizers, rho_prime }
    }

    /// Parse an algebra token and build its root system.
    pub fn from_token(token: &str) -> Result<Self> {
        Ok(RootSystem::new(token.parse()?))
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inverse(&self) -> &[Vec<BigRational>] {
        &self.cartan_inverse
    }

    /// Positive roots in order of non-decreasing height; the simple roots come first.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn nonsimple_positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.positive_roots.iter().filter(|a| !a.is_simple)
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn rho(&self) -> Weight {
        Weight::rho(self.rank())
    }

    /// Reduced Weyl vector in Dynkin labels.
    pub fn rho_prime(&self) -> &RationalWeight {
        &self.rho_prime
    }

    /// Number of non-simple positive roots.
    pub fn k(&self) -> usize {
        self.positive_roots.len() - self.rank()
    }

    pub fn dim_algebra(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    /// Dynkin labels of the simple root `alpha_i` (column `i` of the Cartan matrix).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new(self.cartan.iter().map(|row| row[i]).collect())
    }

    /// Labels of a vector given in root coordinates.
    pub fn from_root_basis(&self, coeffs: &[i64]) -> Weight {
        Weight::new(self.cartan.iter().map(|row| row.iter().zip(coeffs).map(|(a, c)| a * c).sum()).collect())
    }

    /// Root-basis coordinates `c` with `labels = A c`.
    pub fn to_root_basis(&self, w: &Weight) -> Vec<BigRational> {
        self.to_root_basis_rational(&w.to_rational())
    }

    pub fn to_root_basis_rational(&self, w: &RationalWeight) -> Vec<BigRational> {
        self.cartan_inverse
            .iter()
            .map(|row| row.iter().zip(w.labels()).fold(BigRational::zero(), |acc, (a, l)| acc + a * l))
            .collect()
    }

    /// Whether `w` lies in the non-negative root lattice.
    pub fn is_in_q_plus(&self, w: &Weight) -> bool {
        self.to_root_basis(w).iter().all(|c| c.is_integer() && !c.is_negative())
    }

    /// `mu <= lambda` in the dominance order.
    pub fn dominated_by(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.is_in_q_plus(&(lambda - mu))
    }

    /// Invariant form normalized by `(alpha_i, omega_j) = d_i delta_ij`.
    pub fn inner_product(&self, x: &RationalWeight, y: &RationalWeight) -> BigRational {
        let c = self.to_root_basis_rational(x);
        c.iter()
            .zip(&self.symmetrizers)
            .zip(y.labels())
            .fold(BigRational::zero(), |acc, ((ci, &d), yi)| acc + ci * BigRational::from_integer(d.into()) * yi)
    }
}

/// Smallest positive integers `d` with `d_i A_ij = d_j A_ji`.
fn symmetrizers(a: &[Vec<i64>]) -> Vec<i64> {
    let r = a.len();
    let mut d: Vec<Option<BigRational>> = vec![None; r];
    d[0] = Some(BigRational::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..r {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().unwrap();
                d[j] = Some(di * BigRational::new(a[i][j].into(), a[j][i].into()));
                stack.push(j);
            }
        }
    }
    let d: Vec<BigRational> = d.into_iter().map(|x| x.expect("connected Dynkin diagram")).collect();
    let lcm = d.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = d.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter().map(|x| i64::try_from(x / &gcd).expect("small symmetrizer")).collect()
}

/// Positive roots by height-increasing closure along root strings.
fn positive_roots(a: &[Vec<i64>]) -> Vec<Root> {
    let r = a.len();
    let labels_of = |c: &[i64]| -> Weight {
        Weight::new(a.iter().map(|row| row.iter().zip(c).map(|(x, y)| x * y).sum()).collect())
    };
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut roots = Vec::new();
    for i in 0..r {
        let mut c = vec![0; r];
        c[i] = 1;
        known.insert(c.clone());
        roots.push(Root { labels: labels_of(&c), coeffs: c, is_simple: true });
    }
    let mut layer: Vec<usize> = (0..r).collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &idx in &layer {
            let beta = roots[idx].clone();
            for i in 0..r {
                // p = largest q with beta - q alpha_i a root
                let mut p = 0;
                let mut down = beta.coeffs.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - beta.labels.labels()[i] > 0 {
                    let mut up = beta.coeffs.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        roots.push(Root { labels: labels_of(&up), coeffs: up, is_simple: false });
                        next.push(roots.len() - 1);
                    }
                }
            }
        }
        layer = next;
    }
    roots
}

fn invert_integer_matrix(a: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v: Vec<BigRational> = row.iter().map(|&x| BigRational::from_integer(x.into())).collect();
            v.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            v
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("Cartan matrix is invertible");
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(pivot_row) {
                    *x -= &f * p;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}
