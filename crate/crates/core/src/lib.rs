//! Square-wave decomposition of signals.
//!
//! A window of duration `dt` is split into `n` equal sub-intervals and the
//! signal is sampled at their midpoints. The samples are matched exactly by
//! a sum of `n` square-wave trains, train `i` switching sign every
//! `n - i + 1` sub-intervals, so its frequency is `n / (2·dt·(n - i + 1))`.
//! The train coefficients come from one dense `n × n` solve with a `±1`
//! matrix, and the ordered `(frequency, coefficient)` pairs form the
//! spectrum.
//!
//! ```
//! use swt::{sample_analytic, swt, AnalysisWindow, SinusoidSum};
//!
//! let window = AnalysisWindow::unit(10).unwrap();
//! let samples = sample_analytic(&SinusoidSum::two_tone(), &window);
//! let spectrum = swt(&samples).unwrap();
//! assert_eq!(spectrum.len(), 10);
//! assert_eq!(spectrum.dyads()[9].frequency, 5.0);
//! assert!((spectrum.dyads()[9].coefficient - 4.0).abs() < 1e-9);
//! ```

// `!(x > 0.0)` style checks are meant to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod frequency;
pub mod io;
pub mod lu;
pub mod sign_matrix;
pub mod signal;
pub mod solver;
pub mod spectrum;
pub mod train;
pub mod window;

pub use error::{Error, Result};
pub use frequency::{train_frequency, FrequencyGrid};
pub use sign_matrix::SignMatrix;
pub use signal::{SinusoidSum, SinusoidTerm};
pub use solver::{factorization_residual, solve_coefficients, CoefficientVector, SquareWaveSolver};
pub use spectrum::{
    compare_across_ns, reconstruction_error, sample_analytic, swt, swt_with_residual,
    truncate_spectrum, uniform_grid, Dyad, SampleSequence, SwtSpectrum,
};
pub use train::SquareWaveTrain;
pub use window::AnalysisWindow;
