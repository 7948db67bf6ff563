//! Plain-text sample lists: one value per line, `#` comments, blank lines
//! ignored, and an optional single-column CSV header.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::spectrum::SampleSequence;

/// How the sample spacing is specified. The window duration is what the
/// transform needs, so a rate is converted once: `dt = N / rate`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TimeBase {
    Duration(f64),
    Rate(f64),
}

impl TimeBase {
    /// Exactly one of `dt` and `rate` must be present.
    pub fn from_options(dt: Option<f64>, rate: Option<f64>) -> Result<Self> {
        match (dt, rate) {
            (Some(_), Some(_)) => Err(Error::ConflictingTimeBase),
            (None, None) => Err(Error::MissingTimeBase),
            (Some(dt), None) => Ok(TimeBase::Duration(dt)),
            (None, Some(rate)) => {
                if !(rate.is_finite() && rate > 0.0) {
                    return Err(Error::InvalidArgument(format!(
                        "sampling rate must be positive, got {rate}"
                    )));
                }
                Ok(TimeBase::Rate(rate))
            }
        }
    }

    pub fn duration_for(&self, count: usize) -> f64 {
        match *self {
            TimeBase::Duration(dt) => dt,
            TimeBase::Rate(rate) => count as f64 / rate,
        }
    }
}

/// Reads a sample file into a sequence covering `[t0, t0 + dt]`.
pub fn read_samples(
    path: impl AsRef<Path>,
    time_base: TimeBase,
    t0: f64,
) -> Result<SampleSequence> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_samples(&text, path, time_base, t0)
}

/// Parses sample text; `origin` only labels error messages.
pub fn parse_samples(
    text: &str,
    origin: impl AsRef<Path>,
    time_base: TimeBase,
    t0: f64,
) -> Result<SampleSequence> {
    let origin = origin.as_ref();
    let mut values = Vec::new();
    let mut seen_content = false;
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let first = !seen_content;
        seen_content = true;
        let field = line.trim_matches('"').trim();
        match field.parse::<f64>() {
            Ok(v) if v.is_finite() => values.push(v),
            _ if first && looks_like_header(field) => {}
            _ => {
                return Err(Error::MalformedNumber {
                    path: origin.to_path_buf(),
                    line: k + 1,
                    text: raw.to_string(),
                })
            }
        }
    }
    if values.is_empty() {
        return Err(Error::EmptyFile {
            path: origin.to_path_buf(),
        });
    }
    let dt = time_base.duration_for(values.len());
    SampleSequence::from_values(values, t0, dt)
}

fn looks_like_header(field: &str) -> bool {
    let lower = field.to_ascii_lowercase();
    !field.contains(',')
        && field.starts_with(|c: char| c.is_alphabetic() || c == '_')
        && !matches!(lower.as_str(), "nan" | "inf" | "infinity")
}
