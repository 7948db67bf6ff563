//! Ten-train analysis of `3 sin(2π·5t) + 4 sin(2π·7t)` over one second.
//!
//! ```text
//! cargo run --example two_tone [OUT_DIR]
//! ```

use std::path::{Path, PathBuf};

use swt::io::{write_plot, PlotData};
use swt::{sample_analytic, swt_with_residual, AnalysisWindow, SinusoidSum};

pub fn run_example(out_dir: Option<&Path>) -> swt::Result<()> {
    let signal = SinusoidSum::two_tone();
    let window = AnalysisWindow::unit(10)?;
    let samples = sample_analytic(&signal, &window);

    println!("{:>3} {:>8} {:>14}", "j", "t_j", "V_j");
    for (j, (t, v)) in samples.points().enumerate() {
        println!("{:>3} {t:>8.3} {v:>14.10}", j + 1);
    }

    let (spectrum, residual) = swt_with_residual(&samples)?;
    println!();
    println!("{:>3} {:>8} {:>14}", "i", "f_i", "C_i");
    for d in spectrum.dyads() {
        println!(
            "{:>3} {:>8.4} {:>14.10}",
            d.index, d.frequency, d.coefficient
        );
    }
    println!("max |S·C - V| = {residual:e}");

    if let Some(dir) = out_dir {
        let path = dir.join("two_tone_spectrum.svg");
        write_plot(
            &PlotData::Spectrum {
                spectrum: &spectrum,
                title: "3 sin 2π5t + 4 sin 2π7t, N_s = 10",
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
