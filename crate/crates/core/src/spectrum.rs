//! The transform itself: samples in, ordered `(frequency, coefficient)`
//! dyads out, plus reconstruction and cross-resolution comparison.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::frequency::{train_frequency, FrequencyGrid};
use crate::sign_matrix::{sign_at, SignMatrix};
use crate::signal::SinusoidSum;
use crate::solver::SquareWaveSolver;
use crate::train::SquareWaveTrain;
use crate::window::AnalysisWindow;

/// Values `V_1..V_N` taken at the midpoints of a window with `n = N`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSequence {
    values: Vec<f64>,
    unit: String,
    window: AnalysisWindow,
}

impl SampleSequence {
    pub fn new(values: Vec<f64>, window: AnalysisWindow) -> Result<Self> {
        if values.len() != window.n() {
            return Err(Error::DimensionMismatch {
                expected: window.n(),
                found: values.len(),
            });
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "sample values must be finite, got {bad}"
            )));
        }
        Ok(Self {
            values,
            unit: String::new(),
            window,
        })
    }

    /// Measured values spread over `dt` seconds starting at `t0`.
    pub fn from_values(values: Vec<f64>, t0: f64, dt: f64) -> Result<Self> {
        let window = AnalysisWindow::new(t0, dt, values.len())?;
        Self::new(values, window)
    }

    pub fn with_unit(mut self, unit: impl Into<String>) -> Self {
        self.unit = unit.into();
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn unit(&self) -> &str {
        &self.unit
    }

    pub fn window(&self) -> &AnalysisWindow {
        &self.window
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `(midpoint, value)` pairs.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &v)| (self.window.midpoint(k + 1), v))
    }
}

/// One entry of the spectrum. `index` is the 1-based train number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dyad {
    pub index: usize,
    pub frequency: f64,
    pub coefficient: f64,
}

/// Ordered dyads for one analysis window. A spectrum cut at some frequency
/// keeps the full window but fewer dyads.
#[derive(Debug, Clone, PartialEq)]
pub struct SwtSpectrum {
    window: AnalysisWindow,
    unit: String,
    dyads: Vec<Dyad>,
}

impl SwtSpectrum {
    /// Rebuilds a spectrum from stored parts, checking that indices are
    /// strictly increasing within `1..=n` and frequencies match the grid.
    pub fn from_parts(window: AnalysisWindow, unit: String, dyads: Vec<Dyad>) -> Result<Self> {
        let n = window.n();
        let mut prev = 0;
        for d in &dyads {
            if d.index <= prev || d.index > n {
                return Err(Error::InvalidArgument(format!(
                    "dyad index {} out of order or outside 1..={n}",
                    d.index
                )));
            }
            prev = d.index;
            let expected = train_frequency(n, window.duration(), d.index);
            if (d.frequency - expected).abs() > 1e-12 * expected {
                return Err(Error::InvalidArgument(format!(
                    "dyad {} has frequency {} but the window implies {expected}",
                    d.index, d.frequency
                )));
            }
            if !d.coefficient.is_finite() {
                return Err(Error::InvalidArgument(format!(
                    "dyad {} has non-finite coefficient",
                    d.index
                )));
            }
        }
        Ok(Self {
            window,
            unit,
            dyads,
        })
    }

    /// Full spectrum from coefficients `C_1..C_n`.
    pub fn from_coefficients(
        window: AnalysisWindow,
        unit: impl Into<String>,
        coefficients: &[f64],
    ) -> Result<Self> {
        if coefficients.len() != window.n() {
            return Err(Error::DimensionMismatch {
                expected: window.n(),
                found: coefficients.len(),
            });
        }
        let grid = FrequencyGrid::new(&window);
        let dyads = coefficients
            .iter()
            .zip(grid.frequencies())
            .enumerate()
            .map(|(k, (&coefficient, &frequency))| Dyad {
                index: k + 1,
                frequency,
                coefficient,
            })
            .collect();
        Ok(Self {
            window,
            unit: unit.into(),
            dyads,
        })
    }

    pub fn window(&self) -> &AnalysisWindow {
        &self.window
    }

    pub fn unit(&self) -> &str {
        &self.unit
    }

    pub fn dyads(&self) -> &[Dyad] {
        &self.dyads
    }

    pub fn len(&self) -> usize {
        self.dyads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dyads.is_empty()
    }

    /// True when some trains were dropped (e.g. by [`truncate_spectrum`]).
    pub fn is_partial(&self) -> bool {
        self.dyads.len() < self.window.n()
    }

    pub fn frequencies(&self) -> impl Iterator<Item = f64> + '_ {
        self.dyads.iter().map(|d| d.frequency)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = f64> + '_ {
        self.dyads.iter().map(|d| d.coefficient)
    }

    pub fn trains(&self) -> impl Iterator<Item = SquareWaveTrain> + '_ {
        self.dyads.iter().map(move |d| {
            SquareWaveTrain::new(d.index, d.coefficient, self.window).expect("validated index")
        })
    }

    /// Sum of all trains at time `t`.
    pub fn reconstruct(&self, t: f64) -> Result<f64> {
        let row = self.window.subinterval_index(t)?;
        Ok(self.value_on_subinterval(row))
    }

    /// Sum of all trains on sub-interval `row` (0-based).
    pub fn value_on_subinterval(&self, row: usize) -> f64 {
        let n = self.window.n();
        self.dyads
            .iter()
            .map(|d| f64::from(sign_at(n, row, d.index - 1)) * d.coefficient)
            .sum()
    }

    /// `(t, reconstruction)` over [`uniform_grid`].
    pub fn reconstruct_grid(&self, points: usize) -> Result<Vec<(f64, f64)>> {
        uniform_grid(&self.window, points)?
            .into_iter()
            .map(|t| Ok((t, self.reconstruct(t)?)))
            .collect()
    }
}

/// `points` equally spaced instants `t0 + k·dt/points`, `k = 0..points`.
pub fn uniform_grid(window: &AnalysisWindow, points: usize) -> Result<Vec<f64>> {
    if points == 0 {
        return Err(Error::InvalidArgument(
            "grid needs at least one point".into(),
        ));
    }
    let step = window.duration() / points as f64;
    Ok((0..points)
        .map(|k| window.start() + k as f64 * step)
        .collect())
}

/// Midpoint samples of an analytic signal.
pub fn sample_analytic(signal: &SinusoidSum, window: &AnalysisWindow) -> SampleSequence {
    let values = window
        .midpoints()
        .into_iter()
        .map(|t| signal.eval(t))
        .collect();
    SampleSequence::new(values, *window).expect("one value per sub-interval")
}

/// Computes the spectrum of `samples`.
pub fn swt(samples: &SampleSequence) -> Result<SwtSpectrum> {
    swt_with_residual(samples).map(|(spectrum, _)| spectrum)
}

/// Like [`swt`], also returning `‖M·C − V‖∞`.
pub fn swt_with_residual(samples: &SampleSequence) -> Result<(SwtSpectrum, f64)> {
    let window = *samples.window();
    let solver = SquareWaveSolver::new(SignMatrix::new(window.n())?)?;
    let coefficients = solver.solve(samples.values())?;
    let spectrum = SwtSpectrum::from_coefficients(window, samples.unit(), coefficients.values())?;
    Ok((spectrum, coefficients.residual_inf()))
}

/// RMS difference between the reconstruction and `signal` over
/// `grid_points` uniform instants in `[t0, t0 + dt)`. Instants that land
/// exactly on a sub-interval boundary (where trains may switch sign) are
/// skipped.
pub fn reconstruction_error(
    signal: &SinusoidSum,
    window: &AnalysisWindow,
    grid_points: usize,
) -> Result<f64> {
    if grid_points < 2 {
        return Err(Error::InvalidArgument(
            "reconstruction error needs at least two grid points".into(),
        ));
    }
    let spectrum = swt(&sample_analytic(signal, window))?;
    let n = window.n() as u128;
    let g = grid_points as u128;
    let mut sum_sq = 0.0;
    let mut count = 0usize;
    for (k, t) in uniform_grid(window, grid_points)?.into_iter().enumerate() {
        let k = k as u128;
        if k != 0 && (k * n).is_multiple_of(g) {
            continue;
        }
        let diff = spectrum.reconstruct(t)? - signal.eval(t);
        sum_sq += diff * diff;
        count += 1;
    }
    Ok((sum_sq / count as f64).sqrt())
}

/// Keeps the dyads with `frequency <= fmax`.
pub fn truncate_spectrum(spectrum: &SwtSpectrum, fmax: f64) -> Result<SwtSpectrum> {
    if !(fmax > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "frequency cap must be positive, got {fmax}"
        )));
    }
    Ok(SwtSpectrum {
        window: spectrum.window,
        unit: spectrum.unit.clone(),
        dyads: spectrum
            .dyads
            .iter()
            .take_while(|d| d.frequency <= fmax)
            .copied()
            .collect(),
    })
}

/// Spectra of `signal` for each resolution in `ns_list`, all cut at `fmax`
/// so they can be drawn on one frequency axis. Output order follows
/// `ns_list`.
pub fn compare_across_ns(
    signal: &SinusoidSum,
    base: &AnalysisWindow,
    ns_list: &[usize],
    fmax: f64,
) -> Result<Vec<SwtSpectrum>> {
    if ns_list.is_empty() {
        return Err(Error::InvalidArgument(
            "need at least one resolution".into(),
        ));
    }
    if !(fmax > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "frequency cap must be positive, got {fmax}"
        )));
    }
    ns_list
        .par_iter()
        .map(|&n| {
            let window = base.with_n(n)?;
            truncate_spectrum(&swt(&sample_analytic(signal, &window))?, fmax)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn two_tone(n: usize) -> SwtSpectrum {
        swt(&sample_analytic(
            &SinusoidSum::two_tone(),
            &AnalysisWindow::unit(n).unwrap(),
        ))
        .unwrap()
    }

    #[test]
    fn sampled_two_tone_matches_reference_values() {
        let s = sample_analytic(&SinusoidSum::two_tone(), &AnalysisWindow::unit(10).unwrap());
        let v = s.values();
        assert!((v[0] - 6.23606797749979).abs() <= 1e-12);
        assert!((v[2] + 1.0).abs() <= 1e-12);
        assert!((v[9] + 6.23606797749977).abs() <= 1e-12);
    }

    #[test]
    fn zero_signal_samples_to_zero() {
        let s = sample_analytic(&SinusoidSum::zero(), &AnalysisWindow::unit(7).unwrap());
        assert!(s.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn shifted_sine_is_a_cosine() {
        let dt = 3.0;
        let w = AnalysisWindow::new(0.0, dt, 9).unwrap();
        let sig = SinusoidSum::new(vec![crate::signal::SinusoidTerm::new(
            1.0,
            1.0 / (2.0 * dt),
            std::f64::consts::FRAC_PI_2,
        )
        .unwrap()]);
        for (t, v) in sample_analytic(&sig, &w).points() {
            assert!((v - (std::f64::consts::PI * t / dt).cos()).abs() < 1e-12);
        }
    }

    #[test]
    fn constant_samples_give_a_single_nonzero_dyad() {
        for n in [1, 5, 64] {
            let s = SampleSequence::from_values(vec![7.0; n], 0.0, 1.0).unwrap();
            let spec = swt(&s).unwrap();
            assert_eq!(spec.len(), n);
            assert!((spec.dyads()[0].coefficient - 7.0).abs() < 1e-12);
            assert!(spec.dyads()[1..]
                .iter()
                .all(|d| d.coefficient.abs() < 1e-12));
        }
    }

    #[test]
    fn single_sample_spectrum() {
        let s = SampleSequence::from_values(vec![5.0], 0.0, 2.0).unwrap();
        let spec = swt(&s).unwrap();
        assert_eq!(
            spec.dyads(),
            &[Dyad {
                index: 1,
                frequency: 0.25,
                coefficient: 5.0
            }]
        );
    }

    #[test]
    fn two_train_reconstruction() {
        let w = AnalysisWindow::unit(2).unwrap();
        let spec = SwtSpectrum::from_coefficients(w, "", &[3.0, 1.25]).unwrap();
        assert_eq!(spec.reconstruct(0.1).unwrap(), 4.25);
        assert_eq!(spec.reconstruct(0.75).unwrap(), 1.75);
        assert_eq!(spec.reconstruct(1.0).unwrap(), 1.75);
        assert!(spec.reconstruct(1.5).is_err());
    }

    #[test]
    fn zero_spectrum_reconstructs_to_zero() {
        let spec = SwtSpectrum::from_coefficients(AnalysisWindow::unit(6).unwrap(), "", &[0.0; 6])
            .unwrap();
        assert!(spec
            .reconstruct_grid(50)
            .unwrap()
            .iter()
            .all(|&(_, v)| v == 0.0));
    }

    #[test]
    fn reconstruction_hits_the_samples_at_midpoints() {
        let spec = two_tone(10);
        let samples = sample_analytic(&SinusoidSum::two_tone(), spec.window());
        for (t, v) in samples.points() {
            assert!((spec.reconstruct(t).unwrap() - v).abs() <= 1e-8);
        }
    }

    #[test]
    fn summing_train_values_agrees_with_fast_path() {
        let spec = two_tone(17);
        for k in 0..=170 {
            let t = k as f64 / 170.0;
            let slow: f64 = spec.trains().map(|s| s.value(t).unwrap()).sum();
            assert!((slow - spec.reconstruct(t).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn truncation_at_one_hertz_keeps_six() {
        let cut = truncate_spectrum(&two_tone(10), 1.0).unwrap();
        assert_eq!(cut.len(), 6);
        assert!(cut.is_partial());
        assert_eq!(cut.window().n(), 10);
    }

    #[test]
    fn truncation_above_top_frequency_is_identity() {
        let s = two_tone(10);
        assert_eq!(truncate_spectrum(&s, 5.0).unwrap(), s);
        assert_eq!(truncate_spectrum(&s, 1e9).unwrap(), s);
        assert!(truncate_spectrum(&s, 0.1).unwrap().is_empty());
        assert!(truncate_spectrum(&s, 0.0).is_err());
        assert!(truncate_spectrum(&s, f64::NAN).is_err());
    }

    #[test]
    fn truncating_160_trains_at_15_hz() {
        let s =
            SampleSequence::from_values((0..160).map(|k| k as f64).collect(), 0.0, 1.0).unwrap();
        let cut = truncate_spectrum(&swt(&s).unwrap(), 15.0).unwrap();
        // 80 / (161 - i) <= 15  <=>  i <= 155
        let expected = (1..=160)
            .filter(|&i| 80.0 / (161 - i) as f64 <= 15.0)
            .count();
        assert_eq!(expected, 155);
        assert_eq!(cut.len(), expected);
    }

    #[test]
    fn zero_signal_has_no_error() {
        for n in [1, 10, 50] {
            let w = AnalysisWindow::unit(n).unwrap();
            assert_eq!(
                reconstruction_error(&SinusoidSum::zero(), &w, 1000).unwrap(),
                0.0
            );
        }
        let w = AnalysisWindow::unit(3).unwrap();
        assert!(reconstruction_error(&SinusoidSum::zero(), &w, 1).is_err());
    }

    #[test]
    fn finer_windows_approximate_better() {
        let sig = SinusoidSum::two_tone();
        let e10 = reconstruction_error(&sig, &AnalysisWindow::unit(10).unwrap(), 10_000).unwrap();
        let e100 = reconstruction_error(&sig, &AnalysisWindow::unit(100).unwrap(), 10_000).unwrap();
        assert!(e100 < e10);
    }

    #[test]
    fn single_resolution_comparison_equals_swt_then_truncate() {
        let sig = SinusoidSum::two_tone();
        let w = AnalysisWindow::unit(10).unwrap();
        let out = compare_across_ns(&sig, &w, &[10], 3.0).unwrap();
        let direct = truncate_spectrum(&two_tone(10), 3.0).unwrap();
        assert_eq!(out, vec![direct]);
    }

    #[test]
    fn comparison_keeps_order_and_constant_signal_shape() {
        let sig = SinusoidSum::new(vec![crate::signal::SinusoidTerm::new(
            2.0,
            0.0,
            std::f64::consts::FRAC_PI_2,
        )
        .unwrap()]);
        let w = AnalysisWindow::unit(1).unwrap();
        let out = compare_across_ns(&sig, &w, &[40, 8, 20], 3.0).unwrap();
        assert_eq!(
            out.iter().map(|s| s.window().n()).collect::<Vec<_>>(),
            vec![40, 8, 20]
        );
        for s in &out {
            assert!((s.dyads()[0].coefficient - 2.0).abs() < 1e-12);
            assert!(s.dyads()[1..].iter().all(|d| d.coefficient.abs() < 1e-12));
            assert!(s.frequencies().all(|f| f <= 3.0));
        }
        assert!(compare_across_ns(&sig, &w, &[], 3.0).is_err());
        assert!(compare_across_ns(&sig, &w, &[0], 3.0).is_err());
    }

    #[test]
    fn from_parts_validates() {
        let w = AnalysisWindow::unit(4).unwrap();
        let ok = Dyad {
            index: 2,
            frequency: train_frequency(4, 1.0, 2),
            coefficient: 1.0,
        };
        assert!(SwtSpectrum::from_parts(w, String::new(), vec![ok]).is_ok());
        let wrong_f = Dyad {
            frequency: 1.0,
            ..ok
        };
        assert!(SwtSpectrum::from_parts(w, String::new(), vec![wrong_f]).is_err());
        assert!(SwtSpectrum::from_parts(w, String::new(), vec![ok, ok]).is_err());
        let out_of_range = Dyad { index: 5, ..ok };
        assert!(SwtSpectrum::from_parts(w, String::new(), vec![out_of_range]).is_err());
    }

    #[test]
    fn sample_sequence_checks_length_and_finiteness() {
        let w = AnalysisWindow::unit(3).unwrap();
        assert!(SampleSequence::new(vec![1.0, 2.0], w).is_err());
        assert!(SampleSequence::new(vec![1.0, f64::NAN, 2.0], w).is_err());
    }

    fn random_samples(rng: &mut impl Rng, n: usize) -> Vec<f64> {
        (0..n).map(|_| rng.gen_range(-100.0..=100.0)).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn interpolates_midpoints(n in 1usize..=128, seed in any::<u64>()) {
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let values = random_samples(&mut rng, n);
            let s = SampleSequence::from_values(values, -1.0, 2.5).unwrap();
            let spec = swt(&s).unwrap();
            let vmax = s.values().iter().fold(1.0f64, |m, v| m.max(v.abs()));
            for (t, v) in s.points() {
                prop_assert!((spec.reconstruct(t).unwrap() - v).abs() <= 1e-8 * vmax);
            }
        }

        #[test]
        fn linear(n in 1usize..=64, a in -5.0f64..5.0, b in -5.0f64..5.0, seed in any::<u64>()) {
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let v = random_samples(&mut rng, n);
            let w = random_samples(&mut rng, n);
            let mix: Vec<f64> = v.iter().zip(&w).map(|(x, y)| a * x + b * y).collect();
            let sv = swt(&SampleSequence::from_values(v, 0.0, 1.0).unwrap()).unwrap();
            let sw = swt(&SampleSequence::from_values(w, 0.0, 1.0).unwrap()).unwrap();
            let sm = swt(&SampleSequence::from_values(mix, 0.0, 1.0).unwrap()).unwrap();
            let scale = sv.coefficients().chain(sw.coefficients()).fold(1.0f64, |m, c| m.max(c.abs()))
                * (a.abs() + b.abs()).max(1.0);
            for ((cm, cv), cw) in sm.coefficients().zip(sv.coefficients()).zip(sw.coefficients()) {
                prop_assert!((cm - (a * cv + b * cw)).abs() <= 1e-8 * scale);
            }
        }

        #[test]
        fn frequencies_follow_the_grid(n in 1usize..=300, dt in 0.01f64..50.0) {
            let s = SampleSequence::from_values(vec![1.0; n], 0.0, dt).unwrap();
            let spec = swt(&s).unwrap();
            for d in spec.dyads() {
                let f = n as f64 / (2.0 * dt * (n - d.index + 1) as f64);
                prop_assert!((d.frequency - f).abs() <= 1e-12 * f);
            }
            prop_assert!(spec.frequencies().collect::<Vec<_>>().windows(2).all(|p| p[0] < p[1]));
        }

        #[test]
        fn truncation_is_a_prefix(n in 1usize..=80, fmax in 0.01f64..100.0) {
            let s = SampleSequence::from_values((0..n).map(|k| (k % 7) as f64).collect(), 0.0, 1.0).unwrap();
            let spec = swt(&s).unwrap();
            let cut = truncate_spectrum(&spec, fmax).unwrap();
            prop_assert_eq!(cut.dyads(), &spec.dyads()[..cut.len()]);
            prop_assert!(cut.frequencies().all(|f| f <= fmax));
            if cut.len() < spec.len() {
                prop_assert!(spec.dyads()[cut.len()].frequency > fmax);
            }
        }
    }
}
