//! Static SVG figures.
//!
//! Output depends only on the input data: coordinates are printed with a
//! fixed number of decimals and nothing time- or environment-dependent is
//! embedded, so identical inputs give identical bytes.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::spectrum::SwtSpectrum;

const WIDTH: f64 = 720.0;
const PANEL_HEIGHT: f64 = 300.0;
const MARGIN_LEFT: f64 = 72.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 34.0;
const MARGIN_BOTTOM: f64 = 46.0;

/// Paired x/y values.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    x: Vec<f64>,
    y: Vec<f64>,
}

impl Series {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::SeriesMismatch(format!(
                "{} x values but {} y values",
                x.len(),
                y.len()
            )));
        }
        Ok(Self { x, y })
    }

    pub fn from_points(points: &[(f64, f64)]) -> Self {
        let (x, y) = points.iter().copied().unzip();
        Self { x, y }
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.x.iter().copied().zip(self.y.iter().copied())
    }
}

/// What to draw.
#[derive(Debug, Clone, Copy)]
pub enum PlotData<'a> {
    /// Samples against time, joined by a polyline.
    Signal { series: &'a Series, title: &'a str },
    /// Stem plot of coefficient against frequency.
    Spectrum {
        spectrum: &'a SwtSpectrum,
        title: &'a str,
    },
    /// Original curve solid, approximation dashed.
    Reconstruction {
        original: &'a Series,
        approximation: &'a Series,
        title: &'a str,
    },
    /// Stacked stem plots sharing the abscissa `[0, fmax]`.
    Comparison {
        spectra: &'a [SwtSpectrum],
        fmax: f64,
    },
}

pub fn render_plot(data: &PlotData<'_>) -> Result<String> {
    match *data {
        PlotData::Signal { series, title } => {
            let mut svg = Svg::new(1);
            let (xr, yr) = series_ranges(&[series]);
            let frame = svg.panel(0, title, xr, yr, "t (s)", "value");
            svg.polyline(&frame, series, "signal", "");
            Ok(svg.finish())
        }
        PlotData::Spectrum { spectrum, title } => {
            let mut svg = Svg::new(1);
            let fmax = spectrum.frequencies().fold(0.0f64, f64::max);
            let xr = Axis::nice(0.0, if fmax > 0.0 { fmax } else { 1.0 });
            svg.spectrum_panel(0, title, spectrum, xr);
            Ok(svg.finish())
        }
        PlotData::Reconstruction {
            original,
            approximation,
            title,
        } => {
            let mut svg = Svg::new(1);
            let (xr, yr) = series_ranges(&[original, approximation]);
            let frame = svg.panel(0, title, xr, yr, "t (s)", "value");
            svg.polyline(&frame, original, "original", "");
            svg.polyline(
                &frame,
                approximation,
                "approximation",
                " stroke-dasharray=\"6 4\"",
            );
            Ok(svg.finish())
        }
        PlotData::Comparison { spectra, fmax } => {
            if !(fmax > 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "frequency cap must be positive, got {fmax}"
                )));
            }
            let mut svg = Svg::new(spectra.len().max(1));
            let xr = Axis::fixed(0.0, fmax);
            for (k, s) in spectra.iter().enumerate() {
                let title = format!("N_s = {}", s.window().n());
                svg.spectrum_panel(k, &title, s, xr);
            }
            Ok(svg.finish())
        }
    }
}

/// Renders and writes `data` to `path`.
pub fn write_plot(data: &PlotData<'_>, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let svg = render_plot(data)?;
    fs::write(path, svg).map_err(|e| Error::io(path, e))
}

fn series_ranges(series: &[&Series]) -> (Axis, Axis) {
    let mut x = (f64::INFINITY, f64::NEG_INFINITY);
    let mut y = (0.0f64, 0.0f64);
    for s in series {
        for (px, py) in s.points() {
            x = (x.0.min(px), x.1.max(px));
            y = (y.0.min(py), y.1.max(py));
        }
    }
    if !x.0.is_finite() {
        x = (0.0, 1.0);
    }
    (Axis::fixed_or_unit(x.0, x.1), Axis::nice(y.0, y.1))
}

/// Axis extent plus tick spacing.
#[derive(Debug, Clone, Copy)]
struct Axis {
    lo: f64,
    hi: f64,
    step: f64,
}

fn nice_step(span: f64) -> f64 {
    let raw = span / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let m = if norm <= 1.0 {
        1.0
    } else if norm <= 2.0 {
        2.0
    } else if norm <= 5.0 {
        5.0
    } else {
        10.0
    };
    m * mag
}

impl Axis {
    /// Extent widened to whole tick steps, always including zero.
    fn nice(lo: f64, hi: f64) -> Self {
        let (lo, hi) = (lo.min(0.0), hi.max(0.0));
        let (lo, hi) = if hi - lo <= 0.0 {
            (-1.0, 1.0)
        } else {
            (lo, hi)
        };
        let step = nice_step(hi - lo);
        Self {
            lo: (lo / step).floor() * step,
            hi: (hi / step).ceil() * step,
            step,
        }
    }

    fn fixed(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            step: nice_step(hi - lo),
        }
    }

    fn fixed_or_unit(lo: f64, hi: f64) -> Self {
        if hi > lo {
            Self::fixed(lo, hi)
        } else {
            Self::fixed(lo - 0.5, lo + 0.5)
        }
    }

    fn ticks(&self) -> Vec<f64> {
        let first = (self.lo / self.step - 1e-9).ceil() as i64;
        let last = (self.hi / self.step + 1e-9).floor() as i64;
        (first..=last).map(|k| k as f64 * self.step).collect()
    }

    fn decimals(&self) -> usize {
        (-self.step.log10().floor()).max(0.0) as usize
    }
}

fn label(v: f64, decimals: usize) -> String {
    let s = format!("{:.*}", decimals, v);
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Plot area of one panel and its data-to-pixel mapping.
struct Frame {
    left: f64,
    top: f64,
    width: f64,
    height: f64,
    x: Axis,
    y: Axis,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        self.left + (x - self.x.lo) / (self.x.hi - self.x.lo) * self.width
    }

    fn py(&self, y: f64) -> f64 {
        self.top + (self.y.hi - y) / (self.y.hi - self.y.lo) * self.height
    }
}

struct Svg {
    body: String,
}

impl Svg {
    fn new(panels: usize) -> Self {
        let height = PANEL_HEIGHT * panels as f64;
        let mut body = String::new();
        let _ = writeln!(body, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            body,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.0} {height:.0}">"#
        );
        let _ = writeln!(
            body,
            r#"<style>text{{font-family:sans-serif;font-size:11px}}.title{{font-size:13px}}.axis{{stroke:#000;stroke-width:1}}.grid{{stroke:#ccc;stroke-width:0.5}}.zero{{stroke:#888;stroke-width:0.8}}</style>"#
        );
        let _ = writeln!(
            body,
            r##"<rect x="0" y="0" width="{WIDTH:.0}" height="{height:.0}" fill="#fff"/>"##
        );
        Self { body }
    }

    fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }

    fn panel(
        &mut self,
        index: usize,
        title: &str,
        x: Axis,
        y: Axis,
        x_label: &str,
        y_label: &str,
    ) -> Frame {
        let top = index as f64 * PANEL_HEIGHT + MARGIN_TOP;
        let frame = Frame {
            left: MARGIN_LEFT,
            top,
            width: WIDTH - MARGIN_LEFT - MARGIN_RIGHT,
            height: PANEL_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM,
            x,
            y,
        };
        let b = &mut self.body;
        let _ = writeln!(b, r#"<g class="panel" id="panel-{index}">"#);
        let _ = writeln!(
            b,
            r#"<text class="title" x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            frame.left + frame.width / 2.0,
            top - 12.0,
            escape(title)
        );
        let bottom = frame.top + frame.height;
        let right = frame.left + frame.width;

        let xd = x.decimals();
        for t in x.ticks() {
            let px = frame.px(t);
            let _ = writeln!(
                b,
                r#"<line class="grid" x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{bottom:.2}"/>"#,
                frame.top
            );
            let _ = writeln!(
                b,
                r#"<text x="{px:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                bottom + 15.0,
                label(t, xd)
            );
        }
        let yd = y.decimals();
        for t in y.ticks() {
            let py = frame.py(t);
            let _ = writeln!(
                b,
                r#"<line class="grid" x1="{:.2}" y1="{py:.2}" x2="{right:.2}" y2="{py:.2}"/>"#,
                frame.left
            );
            let _ = writeln!(
                b,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                frame.left - 6.0,
                py + 4.0,
                label(t, yd)
            );
        }
        if y.lo < 0.0 && y.hi > 0.0 {
            let py = frame.py(0.0);
            let _ = writeln!(
                b,
                r#"<line class="zero" x1="{:.2}" y1="{py:.2}" x2="{right:.2}" y2="{py:.2}"/>"#,
                frame.left
            );
        }
        let _ = writeln!(
            b,
            r#"<rect class="axis" x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="none"/>"#,
            frame.left, frame.top, frame.width, frame.height
        );
        let _ = writeln!(
            b,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            frame.left + frame.width / 2.0,
            bottom + 34.0,
            escape(x_label)
        );
        let _ = writeln!(
            b,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" transform="rotate(-90 {:.2} {:.2})">{}</text>"#,
            18.0,
            frame.top + frame.height / 2.0,
            18.0,
            frame.top + frame.height / 2.0,
            escape(y_label)
        );
        let _ = writeln!(b, "</g>");
        frame
    }

    fn polyline(&mut self, frame: &Frame, series: &Series, class: &str, extra: &str) {
        if series.is_empty() {
            return;
        }
        let mut pts = String::new();
        for (k, (x, y)) in series.points().enumerate() {
            if k > 0 {
                pts.push(' ');
            }
            let _ = write!(pts, "{:.2},{:.2}", frame.px(x), frame.py(y));
        }
        let _ = writeln!(
            self.body,
            r##"<polyline class="{class}" fill="none" stroke="#1f4e99" stroke-width="1.2"{extra} points="{pts}"/>"##
        );
    }

    fn spectrum_panel(&mut self, index: usize, title: &str, spectrum: &SwtSpectrum, x: Axis) {
        let (lo, hi) = spectrum
            .dyads()
            .iter()
            .filter(|d| d.frequency <= x.hi)
            .fold((0.0f64, 0.0f64), |(lo, hi), d| {
                (lo.min(d.coefficient), hi.max(d.coefficient))
            });
        let y = Axis::nice(lo, hi);
        let y_label = if spectrum.unit().is_empty() {
            "coefficient".to_string()
        } else {
            format!("coefficient ({})", spectrum.unit())
        };
        let frame = self.panel(index, title, x, y, "f (Hz)", &y_label);
        let y0 = frame.py(0.0);
        let b = &mut self.body;
        for d in spectrum.dyads().iter().filter(|d| d.frequency <= x.hi) {
            let px = frame.px(d.frequency);
            let py = frame.py(d.coefficient);
            let _ = writeln!(
                b,
                r##"<g class="stem"><title>i={} f={:.4} C={}</title><line x1="{px:.2}" y1="{y0:.2}" x2="{px:.2}" y2="{py:.2}" stroke="#b22222" stroke-width="1"/><circle cx="{px:.2}" cy="{py:.2}" r="2.2" fill="#b22222"/></g>"##,
                d.index, d.frequency, d.coefficient
            );
        }
    }
}
