//! Square matrices over exact rationals.
//!
//! The column-major convention is used throughout the crate: column j of a
//! basis matrix is the j-th basis vector.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vector::Vector;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    // row-major storage
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidParameter("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_columns(columns: &[Vector]) -> Result<Matrix> {
        let n = columns.len();
        if n == 0 {
            return Err(Error::InvalidParameter("empty matrix".into()));
        }
        for c in columns {
            if c.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: c.dim(),
                });
            }
        }
        let mut m = Matrix::zeros(n);
        for (j, c) in columns.iter().enumerate() {
            for i in 0..n {
                *m.at_mut(i, j) = c.coord(i).clone();
            }
        }
        Ok(m)
    }

    /// Columns given as integer arrays; convenient in tests and examples.
    pub fn from_int_columns(columns: &[&[i64]]) -> Result<Matrix> {
        let cols: Vec<Vector> = columns.iter().map(|c| Vector::from_ints(c)).collect();
        Matrix::from_columns(&cols)
    }

    pub fn zeros(n: usize) -> Matrix {
        assert!(n > 0);
        Matrix {
            n,
            entries: vec![Scalar::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn diagonal(diag: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            *m.at_mut(i, i) = d.clone();
        }
        m
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::new((0..self.n).map(|j| self.at(i, j).clone()).collect())
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.n).map(|i| self.at(i, j).clone()).collect())
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.n).map(|j| self.column(j)).collect()
    }

    pub fn scale_column(&mut self, j: usize, factor: &Scalar) {
        for i in 0..self.n {
            if self.at(i, j).is_zero() {
                continue;
            }
            let v = self.at(i, j) * factor;
            *self.at_mut(i, j) = v;
        }
    }

    pub fn scale_row(&mut self, i: usize, factor: &Scalar) {
        for j in 0..self.n {
            if self.at(i, j).is_zero() {
                continue;
            }
            let v = self.at(i, j) * factor;
            *self.at_mut(i, j) = v;
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n, "matrix product dimension mismatch");
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    *out.at_mut(i, j) += a * b;
                }
            }
        }
        out
    }

    pub fn mul_vector(&self, v: &Vector) -> Vector {
        assert_eq!(self.n, v.dim(), "matrix-vector dimension mismatch");
        let n = self.n;
        let mut out = vec![Scalar::zero(); n];
        for (i, slot) in out.iter_mut().enumerate() {
            for j in 0..n {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                *slot += a * v.coord(j);
            }
        }
        Vector::new(out)
    }

    pub fn is_identity(&self) -> bool {
        let one = Scalar::one();
        let zero = Scalar::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                let want = if i == j { &one } else { &zero };
                if want != self.at(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Exact inverse by rational Gauss-Jordan elimination.
    ///
    /// Pivoting picks the largest exact absolute value in the current column,
    /// breaking ties toward the lowest row index, so the elimination order is
    /// reproducible. When a column has no nonzero pivot left it is linearly
    /// dependent on the preceding ones and that index is reported.
    pub fn invert(&self) -> Result<Matrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let mut pivot = col;
            let mut best = a.at(col, col).abs();
            for r in col + 1..n {
                let mag = a.at(r, col).abs();
                if mag > best {
                    best = mag;
                    pivot = r;
                }
            }
            if best.is_zero() {
                return Err(Error::SingularMatrix {
                    dependent_col: col,
                });
            }
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let scale = a.at(col, col).recip();
            a.scale_row(col, &scale);
            inv.scale_row(col, &scale);
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for j in 0..n {
                    if !a.at(col, j).is_zero() {
                        let delta = &factor * a.at(col, j);
                        *a.at_mut(r, j) -= delta;
                    }
                    if !inv.at(col, j).is_zero() {
                        let delta = &factor * inv.at(col, j);
                        *inv.at_mut(r, j) -= delta;
                    }
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for j in 0..self.n {
            self.entries.swap(r1 * self.n + j, r2 * self.n + j);
        }
    }

    /// The operator norm of the matrix acting on l1^n: the largest absolute
    /// column sum. Exact.
    pub fn operator_norm_l1(&self) -> Scalar {
        self.operator_norm_l1_with_witness().0
    }

    /// Operator norm together with the column index attaining it (lowest
    /// index on ties).
    pub fn operator_norm_l1_with_witness(&self) -> (Scalar, usize) {
        let mut best = Scalar::zero();
        let mut witness = 0;
        for j in 0..self.n {
            let sum: Scalar = (0..self.n).map(|i| self.at(i, j).abs()).sum();
            if sum > best {
                best = sum;
                witness = j;
            }
        }
        (best, witness)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{})\n{}", self.n, self.n, self)
    }
}
