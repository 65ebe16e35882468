use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, TfError>;

#[derive(Debug, Error)]
pub enum TfError {
    #[error("invalid length: {0}")]
    InvalidLength(String),

    #[error("invalid signal specification: {0}")]
    InvalidSpec(String),

    #[error("frequency {freq} Hz is outside [0, {nyquist}] Hz")]
    OutOfBand { freq: f64, nyquist: f64 },

    #[error("incompatible signals: {0}")]
    IncompatibleSignals(String),

    #[error("missing parameter: {0}")]
    MissingParameter(&'static str),

    #[error("invalid hop: must be at least 1 sample")]
    InvalidHop,

    #[error("invalid nfft {nfft}: must be at least the window length {window}")]
    InvalidNfft { nfft: usize, window: usize },

    #[error("degenerate window: {0}")]
    DegenerateWindow(String),

    #[error("invalid scale {0}: scales must be strictly positive")]
    InvalidScale(f64),

    #[error("invalid scale grid: {0}")]
    InvalidGrid(String),

    #[error("invalid band [{lo}, {hi}] Hz: {reason}")]
    InvalidBand { lo: f64, hi: f64, reason: String },

    #[error("invalid lag: {0}")]
    InvalidLag(String),

    #[error("invalid smoothing kernel: {0}")]
    InvalidKernel(String),

    #[error("degenerate grid: {0}")]
    DegenerateGrid(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("format error in {path}: {message}")]
    Format { path: PathBuf, message: String },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl TfError {
    pub(crate) fn format(path: impl Into<PathBuf>, message: impl Into<String>) -> Self {
        TfError::Format {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        TfError::Io {
            path: path.into(),
            source,
        }
    }
}
