//! One second of EEG sampled at 160 Hz, decomposed into 160 trains.
//!
//! ```text
//! cargo run --example eeg_spectrum [OUT_DIR]
//! ```

use std::path::{Path, PathBuf};

use swt::io::{read_samples, write_plot, write_spectrum, PlotData, SpectrumFormat, TimeBase};
use swt::swt_with_residual;

pub fn run_example(out_dir: Option<&Path>) -> swt::Result<()> {
    let input = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/eeg160.txt");
    let samples = read_samples(&input, TimeBase::Rate(160.0), 0.0)?.with_unit("uV");
    let (spectrum, residual) = swt_with_residual(&samples)?;

    let dyads = spectrum.dyads();
    let rows = dyads.len().div_ceil(4);
    for r in 0..rows {
        let line: Vec<String> = (0..4)
            .filter_map(|c| dyads.get(c * rows + r))
            .map(|d| format!("{:>4} {:>8.4} {:>8.2}", d.index, d.frequency, d.coefficient))
            .collect();
        println!("{}", line.join("   "));
    }
    println!("max |S·C - V| = {residual:e}");

    let strongest = dyads
        .iter()
        .max_by(|a, b| a.coefficient.abs().total_cmp(&b.coefficient.abs()))
        .expect("160 dyads");
    println!(
        "largest |C|: {:.2} {} at {:.4} Hz",
        strongest.coefficient.abs(),
        spectrum.unit(),
        strongest.frequency
    );

    if let Some(dir) = out_dir {
        write_spectrum(
            &spectrum,
            dir.join("eeg_spectrum.csv"),
            SpectrumFormat::Csv,
            Some(4),
        )?;
        write_plot(
            &PlotData::Spectrum {
                spectrum: &spectrum,
                title: "EEG, 160 Hz",
            },
            dir.join("eeg_spectrum.svg"),
        )?;
        println!(
            "wrote eeg_spectrum.csv and eeg_spectrum.svg to {}",
            dir.display()
        );
    }
    Ok(())
}

fn main() -> swt::Result<()> {
    let out = std::env::args().nth(1).map(PathBuf::from);
    run_example(out.as_deref())
}
