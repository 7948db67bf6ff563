use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid analysis window: {0}")]
    InvalidWindow(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("singular system: pivot magnitude {pivot:e} at elimination step {step}")]
    SingularSystem { step: usize, pivot: f64 },

    #[error("solution residual {residual:e} exceeds tolerance {tolerance:e}")]
    InaccurateSolution { residual: f64, tolerance: f64 },

    #[error("time {t} lies outside the analysis window [{start}, {end}]")]
    OutsideWindow { t: f64, start: f64, end: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{}: sample file holds no values", .path.display())]
    EmptyFile { path: PathBuf },

    #[error("{}:{line}: malformed number {text:?}", .path.display())]
    MalformedNumber {
        path: PathBuf,
        line: usize,
        text: String,
    },

    #[error("both a duration and a sampling rate were given; supply exactly one")]
    ConflictingTimeBase,

    #[error("neither a duration nor a sampling rate was given")]
    MissingTimeBase,

    #[error("unsupported spectrum schema version {found} (expected {expected})")]
    SchemaVersion { found: u32, expected: u32 },

    #[error("mismatched series lengths: {0}")]
    SeriesMismatch(String),

    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", .path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("{}: {source}", .path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
