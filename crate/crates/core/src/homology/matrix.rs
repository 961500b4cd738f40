use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: alloc::vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, BigInt::one());
        }
        m
    }

    /// Builds a `rows x cols` matrix from row slices. Panics if a row has
    /// the wrong length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: usize, cols: usize, data: &[R]) -> Self {
        assert_eq!(data.len(), rows, "row count");
        let mut m = Self::zeros(rows, cols);
        for (r, row) in data.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "row {r} length");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v.into());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub(crate) fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Matrix product, or `None` if the inner dimensions differ.
    pub fn mul(&self, rhs: &IntegerMatrix) -> Option<IntegerMatrix> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut out = IntegerMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.data[r * rhs.cols + c] += a * b;
                    }
                }
            }
        }
        Some(out)
    }

    /// Rows `from..` as a new matrix.
    pub(crate) fn row_range(&self, from: usize) -> IntegerMatrix {
        let from = from.min(self.rows);
        IntegerMatrix {
            rows: self.rows - from,
            cols: self.cols,
            data: self.data[from * self.cols..].to_vec(),
        }
    }

    /// Columns `from..` as a new matrix.
    pub(crate) fn col_range(&self, from: usize) -> IntegerMatrix {
        let from = from.min(self.cols);
        let mut out = IntegerMatrix::zeros(self.rows, self.cols - from);
        for r in 0..self.rows {
            for c in from..self.cols {
                out.set(r, c - from, self.get(r, c).clone());
            }
        }
        out
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// col[target] -= q * col[source]
    fn col_sub(&mut self, target: usize, source: usize, q: &BigInt) {
        for r in 0..self.rows {
            let s = self.get(r, source);
            if !s.is_zero() {
                let delta = q * s;
                self.data[r * self.cols + target] -= delta;
            }
        }
    }

    /// row[target] += q * row[source]
    fn row_add(&mut self, target: usize, source: usize, q: &BigInt) {
        for c in 0..self.cols {
            let s = self.get(source, c);
            if !s.is_zero() {
                let delta = q * s;
                self.data[target * self.cols + c] += delta;
            }
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Column echelon form `A V = [L | 0]` with `V` unimodular.
pub(crate) struct ColumnEchelon {
    pub rank: usize,
    /// The unimodular `V`.
    pub transform: IntegerMatrix,
    /// `V^{-1}`.
    pub inverse: IntegerMatrix,
}

/// Integer column reduction. After processing, columns `rank..` of `A V`
/// are zero and those columns of `V` form a basis of the integer kernel.
pub(crate) fn column_echelon(a: &IntegerMatrix) -> ColumnEchelon {
    let mut work = a.clone();
    let n = a.cols();
    let mut v = IntegerMatrix::identity(n);
    let mut vinv = IntegerMatrix::identity(n);
    let mut pivot_col = 0;

    for r in 0..a.rows() {
        if pivot_col == n {
            break;
        }
        loop {
            // Smallest nonzero entry of row r among the unreduced columns.
            let best = (pivot_col..n)
                .filter(|&c| !work.get(r, c).is_zero())
                .min_by(|&x, &y| work.get(r, x).magnitude().cmp(work.get(r, y).magnitude()));
            let Some(best) = best else { break };
            work.swap_cols(pivot_col, best);
            v.swap_cols(pivot_col, best);
            vinv.swap_rows(pivot_col, best);

            let mut clean = true;
            for c in pivot_col + 1..n {
                if work.get(r, c).is_zero() {
                    continue;
                }
                let q = work.get(r, c) / work.get(r, pivot_col);
                work.col_sub(c, pivot_col, &q);
                v.col_sub(c, pivot_col, &q);
                vinv.row_add(pivot_col, c, &q);
                if !work.get(r, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                pivot_col += 1;
                break;
            }
        }
    }
    ColumnEchelon {
        rank: pivot_col,
        transform: v,
        inverse: vinv,
    }
}
