//! Unit lower-triangular matrices over an integer-like ring.

use crate::scalar::RingInt;

/// Dense unit lower-triangular matrix. Only the lower triangle is stored;
/// row `i` has length `i + 1` and ends with the diagonal `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitriangularMatrix<T> {
    rows: Vec<Vec<T>>,
}

/// Why a square matrix is not unit lower-triangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeError {
    NotSquare,
    AboveDiagonal { row: usize, col: usize },
    Diagonal { row: usize },
}

impl<T: RingInt> UnitriangularMatrix<T> {
    pub fn identity(n: usize) -> Self {
        UnitriangularMatrix {
            rows: (0..n)
                .map(|i| {
                    let mut r = vec![T::zero(); i + 1];
                    r[i] = T::one();
                    r
                })
                .collect(),
        }
    }

    /// Validate and take a full square matrix.
    pub fn from_square(m: Vec<Vec<T>>) -> Result<Self, ShapeError> {
        let n = m.len();
        let mut rows = Vec::with_capacity(n);
        for (i, mut row) in m.into_iter().enumerate() {
            if row.len() != n {
                return Err(ShapeError::NotSquare);
            }
            if let Some(j) = (i + 1..n).find(|&j| !row[j].is_zero()) {
                return Err(ShapeError::AboveDiagonal { row: i, col: j });
            }
            if !row[i].is_one() {
                return Err(ShapeError::Diagonal { row: i });
            }
            row.truncate(i + 1);
            rows.push(row);
        }
        Ok(UnitriangularMatrix { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        if j <= i {
            self.rows[i][j].clone()
        } else {
            T::zero()
        }
    }

    /// Row `i` padded with zeros to full width.
    pub fn row(&self, i: usize) -> Vec<T> {
        (0..self.dim()).map(|j| self.get(i, j)).collect()
    }

    pub fn to_square(&self) -> Vec<Vec<T>> {
        (0..self.dim()).map(|i| self.row(i)).collect()
    }

    /// Exact inverse by forward substitution: solve `B X = I` column by column.
    pub fn inverse(&self) -> Self {
        let n = self.dim();
        let mut inv: Vec<Vec<T>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = vec![T::zero(); i + 1];
            row[i] = T::one();
            for j in (0..i).rev() {
                // (B^-1)_{ij} = -sum_{j <= k < i} b_{ik} (B^-1)_{kj}
                let mut acc = T::zero();
                for (k, inv_k) in inv.iter().enumerate().take(i).skip(j) {
                    let b = &self.rows[i][k];
                    if !b.is_zero() {
                        acc = acc + b.clone() * inv_k[j].clone();
                    }
                }
                row[j] = -acc;
            }
            inv.push(row);
        }
        UnitriangularMatrix { rows: inv }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        let n = self.dim();
        let rows = (0..n)
            .map(|i| {
                (0..=i).map(|j| (j..=i).fold(T::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))).collect()
            })
            .collect();
        UnitriangularMatrix { rows }
    }

    /// Top-left `n x n` block.
    pub fn truncate(&self, n: usize) -> Self {
        UnitriangularMatrix { rows: self.rows[..n].to_vec() }
    }
}
