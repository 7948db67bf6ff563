use crate::error::{Error, Result};
use crate::frequency::train_frequency;
use crate::sign_matrix::{semi_wave_len, sign_at};
use crate::window::AnalysisWindow;

/// One square-wave train `S_i`: semi-waves of `±|C_i|`, starting positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareWaveTrain {
    index: usize,
    coefficient: f64,
    window: AnalysisWindow,
}

impl SquareWaveTrain {
    /// `index` is 1-based and must not exceed `window.n()`.
    pub fn new(index: usize, coefficient: f64, window: AnalysisWindow) -> Result<Self> {
        if !(1..=window.n()).contains(&index) {
            return Err(Error::InvalidArgument(format!(
                "train index {index} outside 1..={}",
                window.n()
            )));
        }
        Ok(Self {
            index,
            coefficient,
            window,
        })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn coefficient(&self) -> f64 {
        self.coefficient
    }

    pub fn amplitude(&self) -> f64 {
        self.coefficient.abs()
    }

    pub fn window(&self) -> &AnalysisWindow {
        &self.window
    }

    pub fn half_period(&self) -> f64 {
        let n = self.window.n();
        self.window.duration() * semi_wave_len(n, self.index - 1) as f64 / n as f64
    }

    pub fn frequency(&self) -> f64 {
        train_frequency(self.window.n(), self.window.duration(), self.index)
    }

    /// Value at time `t`. Semi-wave edges fall on sub-interval boundaries, so
    /// the sign is read from the sub-interval holding `t`.
    pub fn value(&self, t: f64) -> Result<f64> {
        let row = self.window.subinterval_index(t)?;
        Ok(self.value_on_subinterval(row))
    }

    /// Value on sub-interval `row` (0-based).
    pub fn value_on_subinterval(&self, row: usize) -> f64 {
        f64::from(sign_at(self.window.n(), row, self.index - 1)) * self.coefficient
    }
}
