//! Dense exact matrices over ℚ: rank, nullspace, inverse, and the Jordan
//! partition of nilpotent operators via the rank staircase.
//!
//! Elimination is plain Gauss–Jordan with the pivot chosen as the nonzero
//! candidate of smallest bit size, which keeps intermediate coefficients
//! from blowing up on the structured matrices this crate produces. Row
//! updates under a pivot are independent, so they run through rayon when
//! the matrix is large enough to pay for it.

use crate::rational::{bit_size, Rational};
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("NotNilpotent: no power up to the dimension vanishes")]
    NotNilpotent,
}

/// Row-major dense matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Integer entries, handy in tests.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| crate::rational::qi(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let out_rows: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| {
                let mut row = vec![Rational::zero(); other.cols];
                for k in 0..self.cols {
                    let a = self.at(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    for (j, cell) in row.iter_mut().enumerate() {
                        let b = other.at(k, j);
                        if !b.is_zero() {
                            *cell += a * b;
                        }
                    }
                }
                row
            })
            .collect();
        Self::from_rows(out_rows)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc += self.at(i, j) * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Exact rank over ℚ.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| self.row(i).to_vec())
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        row_reduce(&mut rows, self.cols).len()
    }

    /// A basis of `{x : self·x = 0}`, of size `cols − rank`.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rational>> {
        let mut rows: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| self.row(i).to_vec())
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        let pivots = row_reduce(&mut rows, self.cols);
        let pivot_set: Vec<Option<usize>> = {
            let mut set = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                set[c] = Some(r);
            }
            set
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (&c, row) in pivots.iter().zip(rows.iter()) {
                v[c] = -row[free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                r
            })
            .collect();
        let pivots = row_reduce(&mut rows, n);
        if pivots.len() < n {
            return None;
        }
        // pivots are increasing column indices; with full rank they are 0..n
        let mut inv = Self::zero(n, n);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..n {
                *inv.at_mut(c, j) = rows[r][n + j].clone();
            }
        }
        Some(inv)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self
                .row(i)
                .iter()
                .map(crate::rational::format_rational)
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// In-place Gauss–Jordan over the first `cols` columns (rows may be wider,
/// e.g. when augmented). Returns the pivot columns in increasing order;
/// afterwards `rows[..pivots.len()]` is the reduced echelon basis of the
/// row space and the remaining rows are zero (over the first `cols`).
pub(crate) fn row_reduce(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0usize;
    for col in 0..cols {
        // smallest nonzero candidate as pivot
        let mut best: Option<(usize, u64)> = None;
        for (i, row) in rows.iter().enumerate().skip(next) {
            let x = &row[col];
            if !x.is_zero() {
                let size = bit_size(x);
                if best.is_none_or(|(_, s)| size < s) {
                    best = Some((i, size));
                }
            }
        }
        let Some((pivot_row, _)) = best else { continue };
        rows.swap(next, pivot_row);
        let inv = {
            let p = rows[next][col].clone();
            p.recip()
        };
        for x in rows[next].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let (before, rest) = rows.split_at_mut(next);
        let (pivot, after) = rest.split_first_mut().expect("pivot row exists");
        let wide = pivot.len();
        // row updates stay sequential: at these sizes the arithmetic is
        // memory-bound and per-pivot fork/join costs more than it saves;
        // callers parallelise at the task level instead
        let eliminate = |row: &mut Vec<Rational>| {
            let factor = row[col].clone();
            if factor.is_zero() {
                return;
            }
            for j in 0..wide {
                if !pivot[j].is_zero() {
                    let delta = &factor * &pivot[j];
                    row[j] -= delta;
                }
            }
        };
        before.iter_mut().for_each(eliminate);
        after.iter_mut().for_each(eliminate);
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    pivots
}

/// Non-increasing partition of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Jordan block sizes of a nilpotent matrix via the rank staircase: the
/// number of blocks of size ≥ k is rank(a^{k−1}) − rank(a^k).
pub fn jordan_partition_nilpotent(a: &ExactMatrix) -> Result<Partition, LinalgError> {
    assert_eq!(a.rows(), a.cols(), "jordan partition of a non-square matrix");
    let n = a.rows();
    if n == 0 {
        return Ok(Partition { parts: Vec::new() });
    }
    // ranks[k] = rank(a^k); stop once a power vanishes
    let mut ranks = vec![n];
    let mut power = a.clone();
    loop {
        ranks.push(power.rank());
        if *ranks.last().expect("nonempty") == 0 {
            break;
        }
        if ranks.len() > n {
            return Err(LinalgError::NotNilpotent);
        }
        power = power.mul(a);
    }
    let index = ranks.len() - 1;
    let blocks_at_least = |k: usize| -> usize {
        let rk = |i: usize| ranks.get(i).copied().unwrap_or(0);
        rk(k - 1) - rk(k)
    };
    let mut parts = Vec::new();
    for k in 1..=index {
        let count = blocks_at_least(k) - if k < index { blocks_at_least(k + 1) } else { 0 };
        parts.extend(std::iter::repeat_n(k, count));
    }
    let partition = Partition::new(parts);
    debug_assert_eq!(partition.sum(), n);
    Ok(partition)
}
