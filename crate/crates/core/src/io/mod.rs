//! File formats: sample lists in, spectrum documents and SVG figures out.

pub mod document;
pub mod plot;
pub mod samples;

pub use document::{
    read_spectrum, write_reconstruction, write_spectrum, SpectrumDocument, SpectrumFormat,
    SCHEMA_VERSION,
};
pub use plot::{render_plot, write_plot, PlotData, Series};
pub use samples::{parse_samples, read_samples, TimeBase};
