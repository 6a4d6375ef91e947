//! Dense matrices of arbitrary-precision integers.
//!
//! Everything here is exact: the determinant uses fraction-free (Bareiss)
//! elimination, so no rationals ever appear and intermediate entries stay
//! polynomially bounded instead of blowing up like naive expansion.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("submatrix index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("submatrix index lists must be strictly increasing")]
    NotStrictlyIncreasing,
    #[error("determinantal divisors supported up to {max}x{max}, got {n}x{n}")]
    DivisorBound { n: usize, max: usize },
}

/// Row-major matrix of `BigInt` entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(BigInt::from(f(i, j)));
            }
        }
        IntMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries = rows.into_iter().flatten().map(BigInt::from).collect();
        IntMatrix { rows: r, cols: c, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// The minor's matrix selected by strictly increasing row and column
    /// index lists. Empty lists give the 0x0 matrix (whose determinant is 1).
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Result<IntMatrix, MatrixError> {
        check_index_list(row_idx, self.rows)?;
        check_index_list(col_idx, self.cols)?;
        let mut out = IntMatrix::zeros(row_idx.len(), col_idx.len());
        for (i, &r) in row_idx.iter().enumerate() {
            for (j, &c) in col_idx.iter().enumerate() {
                out[(i, j)] = self[(r, c)].clone();
            }
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free elimination. The 0x0 determinant is
    /// 1 (empty product).
    pub fn determinant(&self) -> Result<BigInt, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut work = self.clone();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if work[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !work[(i, k)].is_zero()) {
                    Some(i) => {
                        work.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &work[(i, j)] * &work[(k, k)] - &work[(i, k)] * &work[(k, j)];
                    work[(i, j)] = num / &prev; // exact by Bareiss' identity
                }
                work[(i, k)] = BigInt::zero();
            }
            prev = work[(k, k)].clone();
        }
        let det = work[(n - 1, n - 1)].clone();
        Ok(if sign < 0 { -det } else { det })
    }

    pub fn is_diagonal_with(&self, diag: &[BigInt]) -> bool {
        if self.rows.min(self.cols) != diag.len() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = if i == j { &diag[i] } else { &BigInt::zero() };
                if self[(i, j)] != *want {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

fn check_index_list(idx: &[usize], bound: usize) -> Result<(), MatrixError> {
    for (pos, &i) in idx.iter().enumerate() {
        if i >= bound {
            return Err(MatrixError::IndexOutOfRange { index: i, bound });
        }
        if pos > 0 && idx[pos - 1] >= i {
            return Err(MatrixError::NotStrictlyIncreasing);
        }
    }
    Ok(())
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
