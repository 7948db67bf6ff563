use crate::window::AnalysisWindow;

/// Frequency of each train for a given window: `f_i = n / (2·dt·(n - i + 1))`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyGrid {
    window: AnalysisWindow,
    frequencies: Vec<f64>,
}

/// Frequency (Hz) of train `i` (1-based) for `n` sub-intervals over `dt` seconds.
pub fn train_frequency(n: usize, dt: f64, i: usize) -> f64 {
    debug_assert!((1..=n).contains(&i));
    n as f64 / (2.0 * dt * (n - i + 1) as f64)
}

impl FrequencyGrid {
    pub fn new(window: &AnalysisWindow) -> Self {
        let n = window.n();
        let dt = window.duration();
        Self {
            window: *window,
            frequencies: (1..=n).map(|i| train_frequency(n, dt, i)).collect(),
        }
    }

    pub fn window(&self) -> &AnalysisWindow {
        &self.window
    }

    pub fn frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    /// Frequency of train `i` (1-based).
    pub fn get(&self, i: usize) -> f64 {
        self.frequencies[i - 1]
    }

    pub fn len(&self) -> usize {
        self.frequencies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frequencies.is_empty()
    }
}
