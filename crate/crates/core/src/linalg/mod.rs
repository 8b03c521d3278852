//! Exact linear algebra over GF(2), the integers and the rationals.

mod det;
mod permanent;
mod rank;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::{Error, Result};

pub use det::{det_binary, det_int};
pub use permanent::{perm_binary, perm_int, perm_int_with_cap, DEFAULT_PERMANENT_CAP};
pub use rank::{rank_gf2, rank_rational};

/// A dense `m x n` matrix over GF(2). Rows index checks, columns index bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Builds a matrix from row vectors. Every entry must be 0 or 1 and all
    /// rows must have the same length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (j, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::InvalidArgument(format!(
                    "row {j} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|&&b| b > 1) {
                return Err(Error::InvalidArgument(format!(
                    "row {j} contains non-binary entry {bad}"
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix from its 1-positions `(row, col)`.
    pub fn from_ones(rows: usize, cols: usize, ones: &[(usize, usize)]) -> Result<Self> {
        let mut h = Self::zeros(rows, cols);
        for &(j, i) in ones {
            if j >= rows {
                return Err(Error::IndexOutOfRange { index: j, bound: rows });
            }
            if i >= cols {
                return Err(Error::IndexOutOfRange { index: i, bound: cols });
            }
            h.set(j, i, true);
        }
        Ok(h)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.data[row * self.cols + col] != 0
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.data[row * self.cols + col] = value as u8;
    }

    pub fn row(&self, row: usize) -> &[u8] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    /// `I_j(H)`: the bits participating in check `row`.
    pub fn row_support(&self, row: usize) -> Vec<usize> {
        (0..self.cols).filter(|&i| self.get(row, i)).collect()
    }

    /// `J_i(H)`: the checks bit `col` participates in.
    pub fn col_support(&self, col: usize) -> Vec<usize> {
        (0..self.rows).filter(|&j| self.get(j, col)).collect()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        (0..self.rows).map(|j| self.row(j).iter().filter(|&&b| b == 1).count()).collect()
    }

    pub fn col_weights(&self) -> Vec<usize> {
        (0..self.cols).map(|i| (0..self.rows).filter(|&j| self.get(j, i)).count()).collect()
    }

    /// Number of 1-entries (Tanner graph edges).
    pub fn ones(&self) -> usize {
        self.data.iter().filter(|&&b| b == 1).count()
    }

    /// `(row, col)` positions of the 1-entries in row-major order.
    pub fn ones_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.ones());
        for j in 0..self.rows {
            for i in 0..self.cols {
                if self.get(j, i) {
                    out.push((j, i));
                }
            }
        }
        out
    }

    /// `M_{R,S}`: rows `rows` and columns `cols`, taken in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        check_indices(rows, self.rows)?;
        check_indices(cols, self.cols)?;
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &j in rows {
            for &i in cols {
                data.push(self.data[j * self.cols + i]);
            }
        }
        Ok(Self {
            rows: rows.len(),
            cols: cols.len(),
            data,
        })
    }

    /// `M_S`: all rows, columns `cols`.
    pub fn columns(&self, cols: &[usize]) -> Result<Self> {
        let all: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&all, cols)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for j in 0..self.rows {
            for i in 0..self.cols {
                t.data[i * self.rows + j] = self.data[j * self.cols + i];
            }
        }
        t
    }

    /// Lifts the entries to the integers as literal 0/1.
    pub fn to_int(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&b| BigInt::from(b)).collect(),
        }
    }

    /// `H^T H` over the integers.
    pub fn gram(&self) -> IntMatrix {
        let mut g = IntMatrix::zeros(self.cols, self.cols);
        for a in 0..self.cols {
            for b in a..self.cols {
                let dot = (0..self.rows).filter(|&j| self.get(j, a) && self.get(j, b)).count();
                g.data[a * self.cols + b] = BigInt::from(dot);
                g.data[b * self.cols + a] = BigInt::from(dot);
            }
        }
        g
    }

    /// Swaps two rows in place.
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.cols {
            self.data.swap(a * self.cols + i, b * self.cols + i);
        }
    }

    /// GF(2) syndrome `H c^T`.
    pub fn syndrome(&self, word: &[u8]) -> Result<Vec<u8>> {
        if word.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: word.len(),
            });
        }
        Ok((0..self.rows)
            .map(|j| {
                self.row(j)
                    .iter()
                    .zip(word)
                    .fold(0u8, |acc, (&h, &c)| acc ^ (h & c & 1))
            })
            .collect())
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.data
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.rows, self.cols)?;
        for j in 0..self.rows {
            let line: Vec<&str> = self.row(j).iter().map(|&b| if b == 1 { "1" } else { "0" }).collect();
            writeln!(f, "  {}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A dense matrix of arbitrary-precision signed integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.data[k * n + k] = BigInt::from(1);
        }
        m
    }

    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (j, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidArgument(format!(
                    "row {j} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigInt) {
        self.data[row * self.cols + col] = value;
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        check_indices(rows, self.rows)?;
        check_indices(cols, self.cols)?;
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &j in rows {
            for &i in cols {
                data.push(self.data[j * self.cols + i].clone());
            }
        }
        Ok(Self {
            rows: rows.len(),
            cols: cols.len(),
            data,
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.cols {
            self.data.swap(a * self.cols + i, b * self.cols + i);
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[r * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c] += a * &other.data[k * other.cols + c];
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|k| self.get(k, k).clone()).sum()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// Entries as `i128` when every entry fits.
    pub(crate) fn to_i128(&self) -> Option<Vec<i128>> {
        self.data.iter().map(ToPrimitive::to_i128).collect()
    }

    pub(crate) fn data(&self) -> &[BigInt] {
        &self.data
    }

    pub(crate) fn ensure_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }
}

impl From<&BinaryMatrix> for IntMatrix {
    fn from(h: &BinaryMatrix) -> Self {
        h.to_int()
    }
}

fn check_indices(indices: &[usize], bound: usize) -> Result<()> {
    match indices.iter().find(|&&k| k >= bound) {
        Some(&index) => Err(Error::IndexOutOfRange { index, bound }),
        None => Ok(()),
    }
}
