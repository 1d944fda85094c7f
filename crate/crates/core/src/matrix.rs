//! Dense matrices over exact rationals.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination on
//! denominator-cleared integer rows, which keeps intermediate entries as
//! minors of the input instead of letting fractions compound. Kernels and
//! linear solves go through a plain rational RREF since they need actual
//! solution vectors.
//!
//! Tensor-index convention used across the crate: the basis vector
//! `e_i (x) e_j` of `V (x) W` has flat index `i * dim(W) + j` (0-based).

use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("row count mismatch: expected {expected} rows, found {found}")]
    RowCountMismatch { expected: usize, found: usize },
    #[error("entry count {found} does not match {rows}x{cols}")]
    BadEntryCount { rows: usize, cols: usize, found: usize },
}

/// Immutable dense matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, LinAlgError> {
        if entries.len() != rows * cols {
            return Err(LinAlgError::BadEntryCount {
                rows,
                cols,
                found: entries.len(),
            });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Convenience constructor from integer rows.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Matrix::from_fn(r, c, |i, j| Scalar::from_int(rows[i][j]))
    }

    /// Matrix whose columns are the given vectors (all the same length).
    pub fn from_columns(cols: &[Vec<Scalar>]) -> Self {
        let c = cols.len();
        let r = if c == 0 { 0 } else { cols[0].len() };
        Matrix::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.cols {
                    let e = self.at(i, j);
                    if !e.is_zero() && !v[j].is_zero() {
                        acc += e * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        (0..self.rows).map(|i| self.at(i, i).clone()).sum()
    }

    /// Kronecker product with the crate-wide flat index convention:
    /// `(a (x) b)[(i*p + k), (j*q + l)] = a[i,j] * b[k,l]` for `b` of shape `p x q`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (p, q) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * p, self.cols * q, |r, c| {
            let (i, k) = (r / p, r % p);
            let (j, l) = (c / q, c % q);
            let a = self.at(i, j);
            if a.is_zero() {
                Scalar::zero()
            } else {
                a * other.at(k, l)
            }
        })
    }

    /// Horizontal concatenation of `blocks`; all blocks must share the row count.
    pub fn hstack(blocks: &[Matrix]) -> Result<Matrix, LinAlgError> {
        if blocks.is_empty() {
            return Ok(Matrix::zeros(0, 0));
        }
        let rows = blocks[0].rows;
        for b in blocks {
            if b.rows != rows {
                return Err(LinAlgError::RowCountMismatch {
                    expected: rows,
                    found: b.rows,
                });
            }
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            for i in 0..rows {
                for j in 0..b.cols {
                    m.set(i, offset + j, b.at(i, j).clone());
                }
            }
            offset += b.cols;
        }
        Ok(m)
    }

    /// Exact rank over Q via fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.integer_rows())
    }

    /// Basis of the right null space; each returned `v` satisfies `self * v = 0`
    /// exactly, and the count is `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (rref, pivots) = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut map = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                map[col] = Some(row);
            }
            map
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (&col, row) in pivots.iter().zip(0..) {
                v[col] = -rref.at(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = b` exactly. Returns `None` when inconsistent; free
    /// variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len(), "right-hand side length mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (rref, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = rref.at(row, self.cols).clone();
        }
        Some(x)
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (rref, pivots) = aug.rref();
        if pivots.len() < n || pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| rref.at(i, n + j).clone()))
    }

    /// Reduced row echelon form plus the pivot columns, exact rational arithmetic.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..m.cols {
            if lead >= m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.at(lead, col).recip().expect("pivot is nonzero");
            for j in col..m.cols {
                let v = m.at(lead, j) * &inv;
                m.set(lead, j, v);
            }
            for r in 0..m.rows {
                if r == lead || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in col..m.cols {
                    let v = m.at(r, j) - &(&factor * m.at(lead, j));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rows rescaled to integers (multiplying a row by its denominator lcm
    /// does not change the rank).
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row
                    .iter()
                    .filter(|s| !s.is_zero())
                    .fold(BigInt::one(), |acc, s| acc.lcm(s.denom()));
                row.iter()
                    .map(|s| s.numer() * (&lcm / s.denom()))
                    .collect()
            })
            .collect()
    }
}

/// One-step Bareiss elimination with row pivoting; each update divides exactly
/// by the previous pivot, so entries stay integral.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                debug_assert!((&num % &prev).is_zero(), "Bareiss exact division failed");
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank of the horizontal concatenation of `blocks`: the dimension of the sum
/// of their column spans. The empty list has rank 0.
pub fn column_span_rank(blocks: &[Matrix]) -> Result<usize, LinAlgError> {
    Ok(Matrix::hstack(blocks)?.rank())
}

/// Echelon basis of the unital matrix algebra generated by `generators`
/// inside `End(Q^dim)`: the span of all words, closed under multiplication.
pub fn algebra_closure(dim: usize, generators: &[Matrix]) -> Vec<Matrix> {
    let vectorize = |m: &Matrix| -> Vec<Scalar> {
        let mut v = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            v.extend(m.row(i).iter().cloned());
        }
        v
    };
    let mut span = RowSpace::new(dim * dim);
    let mut basis: Vec<Matrix> = Vec::new();
    let mut queue: Vec<Matrix> = Vec::new();
    let push = |m: Matrix, span: &mut RowSpace, basis: &mut Vec<Matrix>, queue: &mut Vec<Matrix>| {
        if span.insert(&vectorize(&m)) {
            basis.push(m.clone());
            queue.push(m);
        }
    };
    push(Matrix::identity(dim), &mut span, &mut basis, &mut queue);
    for g in generators {
        push(g.clone(), &mut span, &mut basis, &mut queue);
    }
    while let Some(m) = queue.pop() {
        for g in generators {
            push(&m * g, &mut span, &mut basis, &mut queue);
            push(g * &m, &mut span, &mut basis, &mut queue);
        }
    }
    basis
}

/// A growing subspace of Q^cols kept in reduced row echelon form. Used for
/// incremental span computations (algebra closures, coefficient spaces).
#[derive(Debug, Clone)]
pub struct RowSpace {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for j in p..self.cols {
                if !row[j].is_zero() {
                    let upd = &v[j] - &(&factor * &row[j]);
                    v[j] = upd;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Inserts `v` into the span; returns `true` when the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pivot) = w.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = w[pivot].recip().expect("pivot is nonzero");
        for s in w.iter_mut() {
            *s = &*s * &inv;
        }
        // keep existing rows reduced against the new one
        for row in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for j in 0..self.cols {
                if !w[j].is_zero() {
                    let upd = &row[j] - &(&factor * &w[j]);
                    row[j] = upd;
                }
            }
        }
        let at = self
            .pivots
            .iter()
            .position(|&p| p > pivot)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, w);
        self.pivots.insert(at, pivot);
        true
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in +");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + rhs.at(i, j))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in -");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - rhs.at(i, j))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in *");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
