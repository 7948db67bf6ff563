//! Command-line front end: `analyze`, `reconstruct`, `compare`.
//!
//! Exit status is 0 when every requested output was written, 2 for usage
//! errors, 3 when the linear system is singular and 1 for anything else.
//! Files written by a failing invocation are removed before exiting.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::io::{
    read_samples, read_spectrum, write_plot, write_reconstruction, write_spectrum, PlotData,
    Series, SpectrumFormat, TimeBase,
};
use crate::signal::{SinusoidSum, SinusoidTerm};
use crate::spectrum::{
    compare_across_ns, sample_analytic, swt_with_residual, SampleSequence, SwtSpectrum,
};
use crate::window::AnalysisWindow;

#[derive(Debug, Parser)]
#[command(
    name = "swt",
    version,
    about = "Square-wave spectra of sampled and analytic signals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the spectrum of a sample file or a sum of sinusoids.
    Analyze(AnalyzeArgs),
    /// Evaluate a stored spectrum on a uniform time grid.
    Reconstruct(ReconstructArgs),
    /// Spectra of one analytic signal at several resolutions, cut at a common frequency.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct SignalArgs {
    /// Sample file: one value per line, `#` comments allowed.
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Sinusoid term AMP:FREQ[:PHASE] (repeatable).
    #[arg(long = "sin", value_name = "A:F[:P]", value_parser = parse_term)]
    pub sin: Vec<SinusoidTerm>,
    /// Number of sub-intervals for analytic signals.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: Option<u64>,
    /// Window duration in seconds.
    #[arg(long, value_name = "SECONDS")]
    pub dt: Option<f64>,
    /// Sampling rate in hertz (window duration becomes N / rate).
    #[arg(long, value_name = "HZ")]
    pub rate: Option<f64>,
    /// Window start in seconds.
    #[arg(
        long,
        value_name = "SECONDS",
        default_value_t = 0.0,
        allow_negative_numbers = true
    )]
    pub t0: f64,
    /// Unit label stored with the spectrum.
    #[arg(long, default_value = "")]
    pub unit: String,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub signal: SignalArgs,
    /// Spectrum output file.
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
    /// Optional stem plot of the spectrum (SVG).
    #[arg(long, value_name = "PATH")]
    pub plot: Option<PathBuf>,
    /// Output format; defaults to the extension of --out.
    #[arg(long, value_parser = parse_format)]
    pub format: Option<SpectrumFormat>,
    /// Decimals for frequencies in CSV output.
    #[arg(long)]
    pub digits: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    /// Spectrum JSON document.
    #[arg(long, value_name = "PATH")]
    pub input: PathBuf,
    /// Number of uniformly spaced instants in [t0, t0 + dt).
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub grid: u64,
    /// CSV output with header `t,value`.
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
    /// Optional overlay plot (SVG).
    #[arg(long, value_name = "PATH")]
    pub plot: Option<PathBuf>,
    /// Analytic original to draw under the reconstruction.
    #[arg(long = "sin", value_name = "A:F[:P]", value_parser = parse_term)]
    pub sin: Vec<SinusoidTerm>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Sinusoid term AMP:FREQ[:PHASE] (repeatable).
    #[arg(long = "sin", value_name = "A:F[:P]", value_parser = parse_term, required = true)]
    pub sin: Vec<SinusoidTerm>,
    /// Window duration in seconds.
    #[arg(long, value_name = "SECONDS", default_value_t = 1.0)]
    pub dt: f64,
    /// Window start in seconds.
    #[arg(
        long,
        value_name = "SECONDS",
        default_value_t = 0.0,
        allow_negative_numbers = true
    )]
    pub t0: f64,
    /// Comma-separated list of sub-interval counts.
    #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub ns: Vec<u64>,
    /// Highest frequency kept, in hertz.
    #[arg(long, value_name = "HZ")]
    pub fmax: f64,
    /// Directory receiving one spectrum document per resolution.
    #[arg(long, value_name = "DIR")]
    pub out: PathBuf,
    /// Comparison figure; defaults to DIR/comparison.svg.
    #[arg(long, value_name = "PATH")]
    pub plot: Option<PathBuf>,
    #[arg(long, value_parser = parse_format, default_value = "json")]
    pub format: SpectrumFormat,
    /// Decimals for frequencies in CSV output.
    #[arg(long)]
    pub digits: Option<usize>,
}

fn parse_term(s: &str) -> Result<SinusoidTerm, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<SpectrumFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Failed(#[from] Error),
    #[error("cannot write to standard output: {0}")]
    Stdout(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(Error::SingularSystem { .. }) => 3,
            _ => 1,
        }
    }
}

/// Files written so far; removed on drop unless committed.
struct Outputs {
    paths: Vec<PathBuf>,
    committed: bool,
}

impl Outputs {
    fn new() -> Self {
        Self {
            paths: Vec::new(),
            committed: false,
        }
    }

    fn write<F>(&mut self, path: &Path, write: F) -> Result<(), Error>
    where
        F: FnOnce(&Path) -> Result<(), Error>,
    {
        self.paths.push(path.to_path_buf());
        write(path)
    }

    fn commit(mut self) {
        self.committed = true;
    }
}

impl Drop for Outputs {
    fn drop(&mut self) {
        if !self.committed {
            for p in &self.paths {
                let _ = fs::remove_file(p);
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| CliError::Usage(e.to_string()))?;
    match cli.command {
        Command::Analyze(a) => analyze(&a, stdout),
        Command::Reconstruct(a) => reconstruct(&a, stdout),
        Command::Compare(a) => compare(&a, stdout),
    }
}

pub fn main() -> ExitCode {
    // Let clap print help/version and usage errors in its own format.
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    let result = match cli.command {
        Command::Analyze(a) => analyze(&a, &mut stdout),
        Command::Reconstruct(a) => reconstruct(&a, &mut stdout),
        Command::Compare(a) => compare(&a, &mut stdout),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("swt: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn load_signal(args: &SignalArgs) -> Result<SampleSequence, CliError> {
    let samples = match (&args.input, args.sin.is_empty()) {
        (Some(_), false) => {
            return Err(CliError::Usage(
                "give either --input or --sin, not both".into(),
            ))
        }
        (None, true) => {
            return Err(CliError::Usage(
                "a signal source is required: --input PATH or --sin A:F[:P]".into(),
            ))
        }
        (Some(path), true) => {
            if args.n.is_some() {
                return Err(CliError::Usage(
                    "--n applies to analytic signals; a sample file sets n to its length".into(),
                ));
            }
            let time_base = TimeBase::from_options(args.dt, args.rate)?;
            read_samples(path, time_base, args.t0)?
        }
        (None, false) => {
            let n = args
                .n
                .ok_or_else(|| CliError::Usage("--n is required with --sin".into()))?
                as usize;
            let dt = match TimeBase::from_options(args.dt, args.rate) {
                Ok(tb) => tb.duration_for(n),
                Err(Error::MissingTimeBase) => 1.0,
                Err(e) => return Err(e.into()),
            };
            let window = AnalysisWindow::new(args.t0, dt, n)?;
            let signal: SinusoidSum = args.sin.iter().copied().collect();
            sample_analytic(&signal, &window)
        }
    };
    Ok(samples.with_unit(args.unit.clone()))
}

fn check_digits(format: SpectrumFormat, digits: Option<usize>) -> Result<(), CliError> {
    if digits.is_some() && format != SpectrumFormat::Csv {
        return Err(CliError::Usage(
            "--digits only applies to CSV output".into(),
        ));
    }
    Ok(())
}

fn analyze(args: &AnalyzeArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let format = args
        .format
        .unwrap_or_else(|| SpectrumFormat::from_path(&args.out));
    check_digits(format, args.digits)?;
    let samples = load_signal(&args.signal)?;
    let (spectrum, residual) = swt_with_residual(&samples)?;

    let mut outputs = Outputs::new();
    outputs.write(&args.out, |p| {
        write_spectrum(&spectrum, p, format, args.digits)
    })?;
    if let Some(plot) = &args.plot {
        let title = format!("SWT, N_s = {}", spectrum.window().n());
        outputs.write(plot, |p| {
            write_plot(
                &PlotData::Spectrum {
                    spectrum: &spectrum,
                    title: &title,
                },
                p,
            )
        })?;
    }
    writeln!(stdout, "dyads: {}", spectrum.len()).map_err(CliError::Stdout)?;
    writeln!(stdout, "residual_inf: {residual:e}").map_err(CliError::Stdout)?;
    outputs.commit();
    Ok(())
}

/// Piecewise-constant trace of the train sum, two points per sub-interval.
fn step_series(spectrum: &SwtSpectrum) -> Series {
    let w = spectrum.window();
    let width = w.subinterval_width();
    let points: Vec<(f64, f64)> = (0..w.n())
        .flat_map(|row| {
            let v = spectrum.value_on_subinterval(row);
            let a = w.start() + row as f64 * width;
            [(a, v), (a + width, v)]
        })
        .collect();
    Series::from_points(&points)
}

fn reconstruct(args: &ReconstructArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let spectrum = read_spectrum(&args.input)?;
    let points = spectrum.reconstruct_grid(args.grid as usize)?;

    let mut outputs = Outputs::new();
    outputs.write(&args.out, |p| write_reconstruction(&points, p))?;
    if let Some(plot) = &args.plot {
        let w = spectrum.window();
        let original = if args.sin.is_empty() {
            let pts: Vec<(f64, f64)> = (0..w.n())
                .map(|row| (w.midpoint(row + 1), spectrum.value_on_subinterval(row)))
                .collect();
            Series::from_points(&pts)
        } else {
            let signal: SinusoidSum = args.sin.iter().copied().collect();
            let dense = (w.n() * 20).clamp(1000, 20_000);
            let pts: Vec<(f64, f64)> = (0..=dense)
                .map(|k| {
                    let t = w.start() + w.duration() * k as f64 / dense as f64;
                    (t, signal.eval(t))
                })
                .collect();
            Series::from_points(&pts)
        };
        let approximation = step_series(&spectrum);
        let title = format!("Sum of {} trains", spectrum.len());
        outputs.write(plot, |p| {
            write_plot(
                &PlotData::Reconstruction {
                    original: &original,
                    approximation: &approximation,
                    title: &title,
                },
                p,
            )
        })?;
    }
    writeln!(stdout, "points: {}", points.len()).map_err(CliError::Stdout)?;
    outputs.commit();
    Ok(())
}

fn compare(args: &CompareArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    check_digits(args.format, args.digits)?;
    let signal: SinusoidSum = args.sin.iter().copied().collect();
    let base = AnalysisWindow::new(args.t0, args.dt, 1)?;
    let ns: Vec<usize> = args.ns.iter().map(|&n| n as usize).collect();
    let spectra = compare_across_ns(&signal, &base, &ns, args.fmax)?;

    fs::create_dir_all(&args.out).map_err(|e| Error::io(&args.out, e))?;
    let ext = match args.format {
        SpectrumFormat::Json => "json",
        SpectrumFormat::Csv => "csv",
    };
    let mut outputs = Outputs::new();
    for s in &spectra {
        let path = args.out.join(format!("ns_{}.{ext}", s.window().n()));
        outputs.write(&path, |p| write_spectrum(s, p, args.format, args.digits))?;
        writeln!(stdout, "{}: {} dyads", path.display(), s.len()).map_err(CliError::Stdout)?;
    }
    let plot = args
        .plot
        .clone()
        .unwrap_or_else(|| args.out.join("comparison.svg"));
    outputs.write(&plot, |p| {
        write_plot(
            &PlotData::Comparison {
                spectra: &spectra,
                fmax: args.fmax,
            },
            p,
        )
    })?;
    writeln!(stdout, "{}", plot.display()).map_err(CliError::Stdout)?;
    outputs.commit();
    Ok(())
}
