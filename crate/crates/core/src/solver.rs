//! Solving `M·C = V` for the train coefficients.

use crate::error::{Error, Result};
use crate::lu::LuFactorization;
use crate::sign_matrix::SignMatrix;

/// Accepted solutions satisfy `‖M·C − V‖∞ ≤ 1e-9 · n · max(1, ‖V‖∞)`.
pub fn solve_tolerance(n: usize, samples: &[f64]) -> f64 {
    let vmax = samples.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    1e-9 * n as f64 * vmax.max(1.0)
}

/// Coefficients `C_1..C_n` together with the max-norm residual of the solve.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    values: Vec<f64>,
    residual_inf: f64,
}

impl CoefficientVector {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn residual_inf(&self) -> f64 {
        self.residual_inf
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Factorizes the sign matrix once for repeated solves.
#[derive(Debug, Clone)]
pub struct SquareWaveSolver {
    matrix: SignMatrix,
    lu: LuFactorization,
}

impl SquareWaveSolver {
    pub fn new(matrix: SignMatrix) -> Result<Self> {
        let lu = LuFactorization::new(matrix.to_dense())?;
        Ok(Self { matrix, lu })
    }

    pub fn matrix(&self) -> &SignMatrix {
        &self.matrix
    }

    pub fn factorization(&self) -> &LuFactorization {
        &self.lu
    }

    pub fn solve(&self, samples: &[f64]) -> Result<CoefficientVector> {
        let n = self.matrix.dim();
        if samples.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: samples.len(),
            });
        }
        let values = self.lu.solve(samples)?;
        let residual_inf = factorization_residual(&self.matrix, &values, samples)?;
        let tolerance = solve_tolerance(n, samples);
        if !(residual_inf <= tolerance) {
            return Err(Error::InaccurateSolution {
                residual: residual_inf,
                tolerance,
            });
        }
        Ok(CoefficientVector {
            values,
            residual_inf,
        })
    }
}

/// Solves for the coefficients reproducing `samples` at the midpoints.
pub fn solve_coefficients(matrix: &SignMatrix, samples: &[f64]) -> Result<CoefficientVector> {
    if samples.len() != matrix.dim() {
        return Err(Error::DimensionMismatch {
            expected: matrix.dim(),
            found: samples.len(),
        });
    }
    SquareWaveSolver::new(matrix.clone())?.solve(samples)
}

/// `max_j |Σ_i M[j][i]·C_i − V_j|`.
pub fn factorization_residual(
    matrix: &SignMatrix,
    coefficients: &[f64],
    samples: &[f64],
) -> Result<f64> {
    if samples.len() != matrix.dim() {
        return Err(Error::DimensionMismatch {
            expected: matrix.dim(),
            found: samples.len(),
        });
    }
    let fitted = matrix.mul_vec(coefficients)?;
    Ok(fitted
        .iter()
        .zip(samples)
        .map(|(f, v)| (f - v).abs())
        .fold(0.0, f64::max))
}
