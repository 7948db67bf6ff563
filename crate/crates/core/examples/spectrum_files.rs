//! Writes a spectrum as JSON and CSV, then reads the JSON back.
//!
//! ```text
//! cargo run --example spectrum_files [OUT_DIR]
//! ```

use std::path::{Path, PathBuf};

use swt::io::document::spectrum_csv;
use swt::io::{read_spectrum, write_spectrum, SpectrumDocument, SpectrumFormat};
use swt::{swt, SampleSequence};

pub fn run_example(out_dir: Option<&Path>) -> swt::Result<()> {
    let samples = SampleSequence::from_values(vec![1.0, -2.0, 0.5, 4.0, 3.0, -1.0], 0.0, 0.6)?
        .with_unit("mV");
    let spectrum = swt(&samples)?;

    println!("{}", SpectrumDocument::from(&spectrum).to_json());
    print!("{}", spectrum_csv(&spectrum, Some(3))?);

    let dir = match out_dir {
        Some(d) => d.to_path_buf(),
        None => std::env::temp_dir(),
    };
    let path = dir.join(format!("spectrum_files_{}.json", std::process::id()));
    write_spectrum(&spectrum, &path, SpectrumFormat::Json, None)?;
    let back = read_spectrum(&path)?;
    println!("round trip exact: {}", back == spectrum);
    if out_dir.is_none() {
        let _ = std::fs::remove_file(&path);
    }
    Ok(())
}

fn main() -> swt::Result<()> {
    let out = std::env::args().nth(1).map(PathBuf::from);
    run_example(out.as_deref())
}
