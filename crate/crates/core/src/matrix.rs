//! Dense matrices over an exact scalar.
//!
//! Everything here is exact: no floating point, no rounding. The two
//! nontrivial algorithms are the Bareiss fraction-free determinant and a
//! row Hermite normal form with a recorded unimodular transform. Bareiss
//! keeps intermediate entries as genuine minors, so every division it
//! performs is exact; the Hermite form reduces rows with Euclidean-style
//! division and therefore never leaves Z. Both are cubic in the rank,
//! which is comfortable for the ranks this crate targets (a few hundred).

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    /// All-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// Identity matrix of rank `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from rows, rejecting ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::RaggedRows { row: i });
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from machine-integer literals. Panics on ragged input,
    /// so it is only for constants that are correct by construction.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let converted = rows
            .iter()
            .map(|r| r.iter().map(|&x| T::from_int(x)).collect())
            .collect();
        Self::from_rows(converted).expect("literal matrix must be rectangular")
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Borrows row `i` as a slice.
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Transposed copy.
    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Matrix product. Panics if the inner dimensions disagree; callers
    /// validate shapes before multiplying.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "inner dimensions must agree for a product"
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let acc = out[(i, j)].clone() + a.clone() * b.clone();
                    out[(i, j)] = acc;
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "vector length must match column count");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Entrywise sum. Panics if the shapes disagree.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row counts must agree");
        assert_eq!(self.cols, other.cols, "column counts must agree");
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone() + other[(i, j)].clone();
            }
        }
        out
    }

    /// Entrywise difference. Panics if the shapes disagree.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row counts must agree");
        assert_eq!(self.cols, other.cols, "column counts must agree");
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone() - other[(i, j)].clone();
            }
        }
        out
    }

    /// Block-diagonal sum of two matrices.
    pub fn block_diag(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Whether this is a square identity matrix.
    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want_one = i == j;
                if want_one != self[(i, j)].is_one() || (!want_one && !self[(i, j)].is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// First index pair witnessing failure of symmetry, if any.
    pub fn symmetry_violation(&self) -> Option<(usize, usize)> {
        if self.rows != self.cols {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Whether the matrix is symmetric.
    pub fn is_symmetric(&self) -> bool {
        self.symmetry_violation().is_none()
    }

    /// Entrywise image under `f`.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Exact determinant by the Bareiss fraction-free algorithm.
    ///
    /// Every intermediate entry is a minor of the input, so the divisions
    /// below have zero remainder and the arithmetic stays in `T`.
    pub fn determinant(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m = self.clone();
        let mut negated = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let pivot = (k + 1..n).find(|&r| !m[(r, k)].is_zero());
                match pivot {
                    Some(r) => {
                        m.swap_rows(k, r);
                        negated = !negated;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(i, j)].clone() * m[(k, k)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = num / prev.clone();
                }
                m[(i, k)] = T::zero();
            }
            prev = m[(k, k)].clone();
        }
        let det = m[(n - 1, n - 1)].clone();
        Ok(if negated { -det } else { det })
    }

    /// Row Hermite normal form with a recorded transform.
    ///
    /// Returns `(h, u, rank)` with `u * self = h`, `u` unimodular, `h` in
    /// row Hermite form: pivots positive, entries above a pivot reduced into
    /// `[0, pivot)`, zero rows at the bottom.
    pub(crate) fn row_hnf_with_transform(&self) -> (Self, Self, usize) {
        let mut h = self.clone();
        let mut u = Self::identity(self.rows);
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            // Euclidean phase: shrink the column below pivot_row to a single
            // nonzero entry, the gcd of what was there.
            loop {
                let mut best: Option<usize> = None;
                for r in pivot_row..self.rows {
                    if h[(r, col)].is_zero() {
                        continue;
                    }
                    best = match best {
                        None => Some(r),
                        Some(b) if h[(r, col)].abs() < h[(b, col)].abs() => Some(r),
                        keep => keep,
                    };
                }
                let Some(b) = best else { break };
                if b != pivot_row {
                    h.swap_rows(pivot_row, b);
                    u.swap_rows(pivot_row, b);
                }
                let mut dirty = false;
                for r in pivot_row + 1..self.rows {
                    if h[(r, col)].is_zero() {
                        continue;
                    }
                    let q = h[(r, col)].clone() / h[(pivot_row, col)].clone();
                    if !q.is_zero() {
                        h.row_axpy(r, pivot_row, &q);
                        u.row_axpy(r, pivot_row, &q);
                    }
                    if !h[(r, col)].is_zero() {
                        dirty = true;
                    }
                }
                if !dirty {
                    break;
                }
            }
            if h[(pivot_row, col)].is_zero() {
                continue;
            }
            if h[(pivot_row, col)].is_negative() {
                h.negate_row(pivot_row);
                u.negate_row(pivot_row);
            }
            // Hermite phase: reduce entries above the pivot into [0, pivot).
            for r in 0..pivot_row {
                let q = h[(r, col)].div_floor(&h[(pivot_row, col)]);
                if !q.is_zero() {
                    h.row_axpy(r, pivot_row, &q);
                    u.row_axpy(r, pivot_row, &q);
                }
            }
            pivot_row += 1;
        }
        (h, u, pivot_row)
    }

    /// Basis of the integer kernel `{ x : self * x = 0 }`, returned as the
    /// rows of a matrix in Hermite form. The basis is saturated: it spans
    /// the full group of integer solutions, not a finite-index subgroup.
    pub(crate) fn integer_kernel(&self) -> Self {
        let (_, u, rank) = self.transpose().row_hnf_with_transform();
        let n = u.nrows();
        let mut rows = Vec::with_capacity(n - rank);
        for r in rank..n {
            rows.push(u.row(r).to_vec());
        }
        let raw = Matrix::from_rows(rows).expect("transform rows are rectangular");
        // A second Hermite pass canonicalizes the basis so equal kernels
        // compare equal entrywise.
        let (h, _, krank) = raw.row_hnf_with_transform();
        debug_assert_eq!(krank, raw.nrows(), "kernel basis rows are independent");
        let mut canon = Vec::with_capacity(krank);
        for r in 0..krank {
            canon.push(h.row(r).to_vec());
        }
        Matrix {
            rows: krank,
            cols: self.ncols(),
            data: canon.into_iter().flatten().collect(),
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Replaces row `target` by `row[target] - q * row[source]`.
    pub(crate) fn row_axpy(&mut self, target: usize, source: usize, q: &T) {
        for j in 0..self.cols {
            let delta = q.clone() * self[(source, j)].clone();
            self[(target, j)] = self[(target, j)].clone() - delta;
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            self[(r, j)] = -self[(r, j)].clone();
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<Vec<String>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.data[i * self.cols + j].to_string())
                    .collect()
            })
            .collect();
        let width = rendered
            .iter()
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(1);
        for row in &rendered {
            write!(f, "[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{cell:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
