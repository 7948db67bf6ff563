//! Staircase reconstruction and how its RMS error shrinks with resolution.
//!
//! ```text
//! cargo run --example reconstruction [OUT_DIR]
//! ```

use std::path::{Path, PathBuf};

use swt::io::{write_plot, PlotData, Series};
use swt::{reconstruction_error, sample_analytic, swt, uniform_grid, AnalysisWindow, SinusoidSum};

pub fn run_example(out_dir: Option<&Path>) -> swt::Result<()> {
    let signal = SinusoidSum::two_tone();
    let base = AnalysisWindow::unit(10)?;

    println!("{:>5} {:>12}", "N_s", "rms error");
    for n in [10, 25, 50, 100, 200, 400, 800] {
        let err = reconstruction_error(&signal, &base.with_n(n)?, 10_000)?;
        println!("{n:>5} {err:>12.6}");
    }

    let window = base.with_n(40)?;
    let spectrum = swt(&sample_analytic(&signal, &window))?;
    // values at the midpoints are exact
    for (j, t) in window.midpoints().into_iter().enumerate().take(3) {
        println!(
            "t = {t:.4}: signal {:+.6}, staircase {:+.6}",
            signal.eval(t),
            spectrum.value_on_subinterval(j)
        );
    }

    if let Some(dir) = out_dir {
        let grid = uniform_grid(&window, 1000)?;
        let original = Series::new(grid.clone(), grid.iter().map(|&t| signal.eval(t)).collect())?;
        let approximation = Series::from_points(&spectrum.reconstruct_grid(1000)?);
        let path = dir.join("reconstruction.svg");
        write_plot(
            &PlotData::Reconstruction {
                original: &original,
                approximation: &approximation,
                title: "N_s = 40",
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
