use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The interval `[t0, t0 + dt]` split into `n` equal sub-intervals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawWindow")]
pub struct AnalysisWindow {
    t0: f64,
    dt: f64,
    n: usize,
}

#[derive(Deserialize)]
struct RawWindow {
    t0: f64,
    dt: f64,
    n: usize,
}

impl TryFrom<RawWindow> for AnalysisWindow {
    type Error = Error;

    fn try_from(raw: RawWindow) -> Result<Self> {
        AnalysisWindow::new(raw.t0, raw.dt, raw.n)
    }
}

impl AnalysisWindow {
    pub fn new(t0: f64, dt: f64, n: usize) -> Result<Self> {
        if !t0.is_finite() {
            return Err(Error::InvalidWindow(format!("start {t0} is not finite")));
        }
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::InvalidWindow(format!(
                "duration must be finite and positive, got {dt}"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidWindow(
                "need at least one sub-interval".into(),
            ));
        }
        Ok(Self { t0, dt, n })
    }

    /// Unit window `[0, 1]` s with `n` sub-intervals.
    pub fn unit(n: usize) -> Result<Self> {
        Self::new(0.0, 1.0, n)
    }

    pub fn start(&self) -> f64 {
        self.t0
    }

    pub fn duration(&self) -> f64 {
        self.dt
    }

    pub fn end(&self) -> f64 {
        self.t0 + self.dt
    }

    /// Number of sub-intervals (and of trains, and of samples).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subinterval_width(&self) -> f64 {
        self.dt / self.n as f64
    }

    /// Same start and duration, different subdivision.
    pub fn with_n(&self, n: usize) -> Result<Self> {
        Self::new(self.t0, self.dt, n)
    }

    pub fn contains(&self, t: f64) -> bool {
        t >= self.t0 && t <= self.end()
    }

    pub(crate) fn check_contains(&self, t: f64) -> Result<()> {
        if self.contains(t) {
            Ok(())
        } else {
            Err(Error::OutsideWindow {
                t,
                start: self.t0,
                end: self.end(),
            })
        }
    }

    /// Midpoint of sub-interval `j` (1-based).
    pub fn midpoint(&self, j: usize) -> f64 {
        debug_assert!((1..=self.n).contains(&j));
        self.t0 + (j as f64 - 0.5) * self.dt / self.n as f64
    }

    /// Midpoints of all sub-intervals, in order.
    pub fn midpoints(&self) -> Vec<f64> {
        (1..=self.n).map(|j| self.midpoint(j)).collect()
    }

    /// 0-based index of the sub-interval holding `t`.
    ///
    /// A boundary instant belongs to the sub-interval that starts there; the
    /// window end belongs to the last one.
    pub fn subinterval_index(&self, t: f64) -> Result<usize> {
        self.check_contains(t)?;
        let u = (t - self.t0) * self.n as f64 / self.dt;
        // boundary instants computed in floating point may land a few ulps short
        let nearest = u.round();
        let u = if (u - nearest).abs() <= 1e-9 * u.abs().max(1.0) {
            nearest
        } else {
            u
        };
        Ok((u.floor() as usize).min(self.n - 1))
    }
}
