//! The same signal analysed at several resolutions, cut at 15 Hz.
//!
//! ```text
//! cargo run --example compare_resolutions [OUT_DIR]
//! ```

use std::path::{Path, PathBuf};

use swt::io::{write_plot, PlotData};
use swt::{compare_across_ns, AnalysisWindow, SinusoidSum};

pub fn run_example(out_dir: Option<&Path>) -> swt::Result<()> {
    let signal = SinusoidSum::two_tone();
    let ns = [100, 200, 400];
    let spectra = compare_across_ns(&signal, &AnalysisWindow::unit(1)?, &ns, 15.0)?;

    for s in &spectra {
        let top: Vec<String> = {
            let mut d = s.dyads().to_vec();
            d.sort_by(|a, b| b.coefficient.abs().total_cmp(&a.coefficient.abs()));
            d.iter()
                .take(3)
                .map(|d| format!("{:.3} Hz ({:+.3})", d.frequency, d.coefficient))
                .collect()
        };
        println!(
            "N_s = {:>3}: {:>3} dyads up to 15 Hz, strongest {}",
            s.window().n(),
            s.len(),
            top.join(", ")
        );
    }

    if let Some(dir) = out_dir {
        let path = dir.join("comparison.svg");
        write_plot(
            &PlotData::Comparison {
                spectra: &spectra,
                fmax: 15.0,
            },
            &path,
        )?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn main() -> swt::Result<()> {
    let out = std::env::args().nth(1).map(PathBuf::from);
    run_example(out.as_deref())
}
