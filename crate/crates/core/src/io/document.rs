//! Spectrum serialization.
//!
//! JSON layout:
//!
//! ```text
//! { "schemaVersion": 1,
//!   "window": {"t0": 0.0, "dt": 1.0, "n": 10},
//!   "unit": "",
//!   "dyads": [{"i": 1, "frequency": 0.5, "coefficient": -7.23...}, ...] }
//! ```
//!
//! CSV layout: header `i,frequency,coefficient`, one dyad per row. Numbers
//! use the shortest representation that parses back to the same `f64`.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectrum::{Dyad, SwtSpectrum};
use crate::window::AnalysisWindow;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumFormat {
    Json,
    Csv,
}

impl SpectrumFormat {
    /// Guesses from the file extension; anything but `.csv` is JSON.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => SpectrumFormat::Csv,
            _ => SpectrumFormat::Json,
        }
    }
}

impl FromStr for SpectrumFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(SpectrumFormat::Json),
            "csv" => Ok(SpectrumFormat::Csv),
            other => Err(Error::InvalidArgument(format!(
                "unknown format {other:?} (expected json or csv)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpectrumDocument {
    pub schema_version: u32,
    pub window: WindowRecord,
    pub unit: String,
    pub dyads: Vec<DyadRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WindowRecord {
    pub t0: f64,
    pub dt: f64,
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DyadRecord {
    pub i: usize,
    pub frequency: f64,
    pub coefficient: f64,
}

impl From<&SwtSpectrum> for SpectrumDocument {
    fn from(s: &SwtSpectrum) -> Self {
        let w = s.window();
        Self {
            schema_version: SCHEMA_VERSION,
            window: WindowRecord {
                t0: w.start(),
                dt: w.duration(),
                n: w.n(),
            },
            unit: s.unit().to_string(),
            dyads: s
                .dyads()
                .iter()
                .map(|d| DyadRecord {
                    i: d.index,
                    frequency: d.frequency,
                    coefficient: d.coefficient,
                })
                .collect(),
        }
    }
}

impl TryFrom<SpectrumDocument> for SwtSpectrum {
    type Error = Error;

    fn try_from(doc: SpectrumDocument) -> Result<Self> {
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::SchemaVersion {
                found: doc.schema_version,
                expected: SCHEMA_VERSION,
            });
        }
        let window = AnalysisWindow::new(doc.window.t0, doc.window.dt, doc.window.n)?;
        let dyads = doc
            .dyads
            .into_iter()
            .map(|d| Dyad {
                index: d.i,
                frequency: d.frequency,
                coefficient: d.coefficient,
            })
            .collect();
        SwtSpectrum::from_parts(window, doc.unit, dyads)
    }
}

impl SpectrumDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Parses JSON, rejecting unknown schema versions before anything else.
    pub fn from_json(text: &str, origin: &Path) -> Result<Self> {
        let json_err = |source| Error::Json {
            path: origin.to_path_buf(),
            source,
        };
        let value: serde_json::Value = serde_json::from_str(text).map_err(json_err)?;
        let version = value.get("schemaVersion").and_then(|v| v.as_u64());
        match version {
            Some(v) if v == u64::from(SCHEMA_VERSION) => {}
            Some(v) => {
                return Err(Error::SchemaVersion {
                    found: u32::try_from(v).unwrap_or(u32::MAX),
                    expected: SCHEMA_VERSION,
                })
            }
            None => {
                return Err(Error::InvalidArgument(format!(
                    "{}: missing schemaVersion",
                    origin.display()
                )))
            }
        }
        serde_json::from_value(value).map_err(json_err)
    }
}

/// Renders the spectrum as CSV. `digits` fixes the number of decimals used
/// for frequencies; coefficients are always written in full.
pub fn spectrum_csv(spectrum: &SwtSpectrum, digits: Option<usize>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |source| Error::Csv {
        path: "<memory>".into(),
        source,
    };
    w.write_record(["i", "frequency", "coefficient"])
        .map_err(csv_err)?;
    for d in spectrum.dyads() {
        let frequency = match digits {
            Some(p) => format!("{:.*}", p, d.frequency),
            None => d.frequency.to_string(),
        };
        w.write_record([d.index.to_string(), frequency, d.coefficient.to_string()])
            .map_err(csv_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::io("<memory>", e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("ascii output"))
}

/// Writes the spectrum to `path`.
pub fn write_spectrum(
    spectrum: &SwtSpectrum,
    path: impl AsRef<Path>,
    format: SpectrumFormat,
    digits: Option<usize>,
) -> Result<()> {
    let path = path.as_ref();
    let text = match format {
        SpectrumFormat::Json => SpectrumDocument::from(spectrum).to_json(),
        SpectrumFormat::Csv => spectrum_csv(spectrum, digits)?,
    };
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Reads a JSON spectrum document.
pub fn read_spectrum(path: impl AsRef<Path>) -> Result<SwtSpectrum> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    SpectrumDocument::from_json(&text, path)?.try_into()
}

/// Writes `(t, value)` rows under the header `t,value`.
pub fn write_reconstruction(points: &[(f64, f64)], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = csv::Writer::from_writer(std::io::BufWriter::new(file));
    let csv_err = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    w.write_record(["t", "value"]).map_err(csv_err)?;
    for &(t, v) in points {
        w.write_record([t.to_string(), v.to_string()])
            .map_err(csv_err)?;
    }
    let mut inner = w
        .into_inner()
        .map_err(|e| Error::io(path, e.into_error()))?;
    inner.flush().map_err(|e| Error::io(path, e))
}
