//! Dense LU factorization with partial (row) pivoting.
//!
//! Storage is row-major. Pivot selection takes the first row holding the
//! largest absolute value in the current column, so the factorization is a
//! deterministic function of the input bits.

use crate::error::{Error, Result};

/// Pivots smaller than this (in absolute value) mark the system singular.
/// Matrices handled here have entries of magnitude one, so the threshold is
/// effectively relative to the largest initial column magnitude.
pub const PIVOT_EPS: f64 = 1e-12;

/// Row-major dense square matrix of `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Builds from a row-major buffer of length `n * n`.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: data.len(),
            });
        }
        Ok(Self { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.n + col] = value;
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.data[row * self.n..(row + 1) * self.n]
    }

    /// `self * x`.
    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok((0..self.n)
            .map(|r| self.row(r).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }
}

/// Packed `L\U` factors plus the row permutation, such that `P·A = L·U`
/// with unit lower-triangular `L`.
#[derive(Debug, Clone)]
pub struct LuFactorization {
    lu: DenseMatrix,
    /// `perm[k]` is the original row now stored at position `k`.
    perm: Vec<usize>,
}

impl LuFactorization {
    /// Factorizes `matrix`, consuming it as workspace.
    pub fn new(mut matrix: DenseMatrix) -> Result<Self> {
        let n = matrix.n;
        let mut perm: Vec<usize> = (0..n).collect();
        let data = &mut matrix.data;

        for k in 0..n {
            let mut pivot_row = k;
            let mut pivot_abs = data[k * n + k].abs();
            for r in k + 1..n {
                let v = data[r * n + k].abs();
                if v > pivot_abs {
                    pivot_abs = v;
                    pivot_row = r;
                }
            }
            if !(pivot_abs >= PIVOT_EPS) {
                return Err(Error::SingularSystem {
                    step: k + 1,
                    pivot: pivot_abs,
                });
            }
            if pivot_row != k {
                let (head, tail) = data.split_at_mut(pivot_row * n);
                head[k * n..(k + 1) * n].swap_with_slice(&mut tail[..n]);
                perm.swap(k, pivot_row);
            }

            let (upper, lower) = data.split_at_mut((k + 1) * n);
            let pivot_tail = &upper[k * n + k..(k + 1) * n];
            let pivot = pivot_tail[0];
            let pivot_tail = &pivot_tail[1..];
            for row in lower.chunks_exact_mut(n) {
                let factor = row[k] / pivot;
                row[k] = factor;
                if factor != 0.0 {
                    for (a, &u) in row[k + 1..].iter_mut().zip(pivot_tail) {
                        *a -= factor * u;
                    }
                }
            }
        }

        Ok(Self { lu: matrix, perm })
    }

    pub fn dim(&self) -> usize {
        self.lu.n
    }

    /// Solves `A·x = b` with forward then back substitution.
    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.lu.n;
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: b.len(),
            });
        }
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for r in 0..n {
            let row = self.lu.row(r);
            let s: f64 = row[..r].iter().zip(&x[..r]).map(|(l, y)| l * y).sum();
            x[r] -= s;
        }
        for r in (0..n).rev() {
            let row = self.lu.row(r);
            let s: f64 = row[r + 1..]
                .iter()
                .zip(&x[r + 1..])
                .map(|(u, y)| u * y)
                .sum();
            x[r] = (x[r] - s) / row[r];
        }
        Ok(x)
    }

    /// Smallest pivot magnitude on the diagonal of `U`.
    pub fn min_pivot(&self) -> f64 {
        (0..self.lu.n)
            .map(|k| self.lu.get(k, k).abs())
            .fold(f64::INFINITY, f64::min)
    }
}
