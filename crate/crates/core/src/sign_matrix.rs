//! The ±1 system matrix linking train coefficients to midpoint samples.
//!
//! Row `j` is a sub-interval, column `i` a train. Train `i` (1-based) is made
//! of semi-waves spanning `n - i + 1` sub-intervals and starts positive, so
//!
//! ```text
//! entry(j, i) = (-1)^floor((j - 1) / (n - i + 1))
//! ```
//!
//! Column 1 never changes sign; column `n` alternates every row.

use crate::error::{Error, Result};
use crate::lu::DenseMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignMatrix {
    n: usize,
    entries: Vec<i8>,
}

/// Number of sub-intervals spanned by one semi-wave of train `col` (0-based).
pub(crate) fn semi_wave_len(n: usize, col: usize) -> usize {
    n - col
}

pub(crate) fn sign_at(n: usize, row: usize, col: usize) -> i8 {
    if (row / semi_wave_len(n, col)).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl SignMatrix {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("sign matrix needs n >= 1".into()));
        }
        let entries = (0..n)
            .flat_map(|row| (0..n).map(move |col| sign_at(n, row, col)))
            .collect();
        Ok(Self { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Sign of train `col` on sub-interval `row`, both 0-based.
    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[i8] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = i8> + '_ {
        (0..self.n).map(move |row| self.get(row, col))
    }

    /// Inner product of two columns; nonzero values witness that the trains
    /// are not mutually orthogonal on the midpoint grid.
    pub fn column_dot(&self, a: usize, b: usize) -> i64 {
        (0..self.n)
            .map(|row| i64::from(self.get(row, a)) * i64::from(self.get(row, b)))
            .sum()
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let data = self.entries.iter().map(|&s| f64::from(s)).collect();
        DenseMatrix::from_row_major(self.n, data).expect("n*n entries")
    }

    /// `M·c`, i.e. the value of the train sum on every sub-interval.
    pub fn mul_vec(&self, c: &[f64]) -> Result<Vec<f64>> {
        if c.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: c.len(),
            });
        }
        Ok((0..self.n)
            .map(|row| {
                self.row(row)
                    .iter()
                    .zip(c)
                    .map(|(&s, &x)| f64::from(s) * x)
                    .sum()
            })
            .collect())
    }
}
