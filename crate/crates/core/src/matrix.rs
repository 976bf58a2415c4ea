//! Dense matrices over an exact field, with exact Gaussian elimination.

use crate::scalar::Field;
use crate::Error;
use alloc::vec;
use alloc::vec::Vec;

/// Row-major dense matrix. Linear solves use exact arithmetic with
/// first-nonzero pivoting, which is only appropriate over exact fields;
/// float instantiations are used solely to build and compare entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// Builds entrywise from a function of (row, column).
    pub fn from_fn<F: FnMut(usize, usize) -> T>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Identity matrix of order n.
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at (i, j).
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    /// Overwrites the entry at (i, j).
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    /// Matrix product self·rhs.
    pub fn mul(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.get(i, k).clone() * rhs.get(k, j).clone();
            }
            acc
        })
    }

    /// Entrywise sum.
    pub fn add(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() + rhs.get(i, j).clone()
        })
    }

    /// Entrywise difference.
    pub fn sub(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() - rhs.get(i, j).clone()
        })
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &T) -> Matrix<T> {
        Matrix::from_fn(self.rows, self.cols, |i, j| c.clone() * self.get(i, j).clone())
    }

    /// Entrywise image under f (e.g. exact → float conversion).
    pub fn map<U: Field, F: FnMut(&T) -> U>(&self, mut f: F) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| f(v)).collect(),
        }
    }

    /// (below, above): the largest |i − j| with a nonzero entry below and
    /// above the diagonal. A diagonal matrix reports (0, 0), a tridiagonal
    /// one at most (1, 1).
    pub fn bandwidth(&self) -> (usize, usize) {
        let mut below = 0;
        let mut above = 0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !(self.get(i, j).clone()).is_zero() {
                    if i > j {
                        below = below.max(i - j);
                    } else {
                        above = above.max(j - i);
                    }
                }
            }
        }
        (below, above)
    }

    /// Solves self·X = rhs by exact Gauss–Jordan elimination.
    pub fn solve(&self, rhs: &Matrix<T>) -> Result<Matrix<T>, Error> {
        assert_eq!(self.rows, self.cols, "solve requires a square matrix");
        assert_eq!(self.rows, rhs.rows, "dimension mismatch in solve");
        let n = self.rows;
        let mut a = self.clone();
        let mut x = rhs.clone();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).clone().is_zero())
                .ok_or(Error::SingularEvaluationMatrix)?;
            if pivot != col {
                for j in 0..n {
                    let t = a.get(pivot, j).clone();
                    a.set(pivot, j, a.get(col, j).clone());
                    a.set(col, j, t);
                }
                for j in 0..x.cols {
                    let t = x.get(pivot, j).clone();
                    x.set(pivot, j, x.get(col, j).clone());
                    x.set(col, j, t);
                }
            }
            let inv = T::one() / a.get(col, col).clone();
            for j in 0..n {
                a.set(col, j, a.get(col, j).clone() * inv.clone());
            }
            for j in 0..x.cols {
                x.set(col, j, x.get(col, j).clone() * inv.clone());
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = a.get(r, j).clone() - factor.clone() * a.get(col, j).clone();
                    a.set(r, j, v);
                }
                for j in 0..x.cols {
                    let v = x.get(r, j).clone() - factor.clone() * x.get(col, j).clone();
                    x.set(r, j, v);
                }
            }
        }
        Ok(x)
    }

    /// Similarity transform e⁻¹·self·e.
    pub fn conjugate(&self, e: &Matrix<T>) -> Result<Matrix<T>, Error> {
        e.solve(&self.mul(e))
    }
}
