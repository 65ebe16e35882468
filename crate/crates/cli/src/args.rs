use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "tfkit", version, about = "Time-frequency analysis toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Synthesize a test signal and write it to a file.
    Gen(GenArgs),
    /// Compute a time-frequency grid from a signal file.
    Transform(TransformArgs),
    /// Render a grid file as a PPM heatmap.
    Render(RenderArgs),
    /// Render every transform of the synthetic signal set.
    Gallery(GalleryArgs),
    /// Measure cross terms of a two-component grid and print JSON.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Tone,
    Chirp,
    Pulse,
    Step,
    Burst,
    Noise,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SignalFileFormat {
    Wav,
    Raw,
    Csv,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Tone, pulse or burst frequency, Hz.
    #[arg(long)]
    pub freq: Option<f64>,
    /// Chirp start frequency, Hz.
    #[arg(long)]
    pub f_start: Option<f64>,
    /// Chirp end frequency, Hz.
    #[arg(long)]
    pub f_end: Option<f64>,
    /// Pulse or burst center, s.
    #[arg(long)]
    pub center: Option<f64>,
    /// Pulse standard deviation or burst length, s.
    #[arg(long)]
    pub width: Option<f64>,
    /// Step times for `step`, s, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub step_times: Vec<f64>,
    /// Frequencies for `step`, Hz, comma separated (one more than step times).
    #[arg(long, value_delimiter = ',')]
    pub freqs: Vec<f64>,
    /// Noise seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1.0)]
    pub amplitude: f64,
    /// Seconds.
    #[arg(long, default_value_t = 1.0)]
    pub duration: f64,
    /// Hz.
    #[arg(long, default_value_t = 1000.0)]
    pub sample_rate: f64,
    #[arg(long, short)]
    pub out: PathBuf,
    /// Output format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    pub format: Option<SignalFileFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Stft,
    Gabor,
    Cwt,
    Stockwell,
    Wvd,
    Spwvd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WindowArg {
    Rect,
    Hann,
    Gaussian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundaryArg {
    Periodic,
    ZeroPad,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridFileFormat {
    Tfgrid,
    Csv,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    /// Input format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    pub input_format: Option<SignalFileFormat>,
    /// Sample rate for raw and CSV input, Hz.
    #[arg(long)]
    pub sample_rate: Option<f64>,
    #[arg(long, value_enum)]
    pub method: Method,
    #[arg(long, short)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "tfgrid")]
    pub grid_format: GridFileFormat,

    /// STFT window.
    #[arg(long, value_enum, default_value = "hann")]
    pub window: WindowArg,
    /// STFT window length in samples. Gaussian windows default to +-4 sigma.
    #[arg(long)]
    pub window_len: Option<usize>,
    /// Gaussian parameter of exp(-alpha t^2), 1/s^2.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Frame hop in samples; defaults to a quarter window.
    #[arg(long)]
    pub hop: Option<usize>,
    /// DFT length; defaults to the window length rounded up to a power of two.
    #[arg(long)]
    pub nfft: Option<usize>,

    /// Lowest analysis frequency for cwt and stockwell, Hz.
    #[arg(long)]
    pub f_min: Option<f64>,
    /// Highest analysis frequency for cwt and stockwell, Hz.
    #[arg(long)]
    pub f_max: Option<f64>,
    /// CWT voices per octave.
    #[arg(long, default_value_t = 12)]
    pub voices: usize,
    /// Morlet center frequency, Hz.
    #[arg(long, default_value_t = 1.0)]
    pub center_freq: f64,
    /// Morlet envelope standard deviation in periods of the center frequency.
    #[arg(long)]
    pub cycles: Option<f64>,
    #[arg(long, value_enum, default_value = "periodic")]
    pub boundary: BoundaryArg,

    /// Largest WVD lag index (lags span twice this many samples).
    #[arg(long)]
    pub max_lag: Option<usize>,
    /// Number of WVD frequency bins.
    #[arg(long)]
    pub n_freq: Option<usize>,
    /// Skip two-times interpolation before the WVD.
    #[arg(long)]
    pub no_upsample: bool,
    /// SPWVD time kernel length in frames (odd).
    #[arg(long)]
    pub time_kernel: Option<usize>,
    /// SPWVD frequency kernel length in bins (odd).
    #[arg(long)]
    pub freq_kernel: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ColormapArg {
    Viridis,
    Grayscale,
    Diverging,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DisplayArg {
    Db,
    Linear,
    Signed,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum NormalizeArg {
    Max,
    Absolute,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long, short)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "viridis")]
    pub colormap: ColormapArg,
    #[arg(long, value_enum, default_value = "db")]
    pub display: DisplayArg,
    #[arg(long, value_enum, default_value = "max")]
    pub normalize: NormalizeArg,
    #[arg(long, default_value_t = -120.0, allow_negative_numbers = true)]
    pub db_floor: f64,
    /// Logarithmic frequency axis. Scalograms use one by default.
    #[arg(long, conflicts_with = "linear_freq")]
    pub log_freq: bool,
    /// Force a linear frequency axis.
    #[arg(long)]
    pub linear_freq: bool,
    #[arg(long, default_value_t = 640)]
    pub width: usize,
    #[arg(long, default_value_t = 360)]
    pub height: usize,
}

#[derive(Debug, Args)]
pub struct GalleryArgs {
    #[arg(long, short)]
    pub out: PathBuf,
    #[arg(long, default_value_t = 1000.0)]
    pub sample_rate: f64,
    #[arg(long, default_value_t = 1.0)]
    pub duration: f64,
    #[arg(long, default_value_t = 480)]
    pub width: usize,
    #[arg(long, default_value_t = 270)]
    pub height: usize,
    /// Show WVD-family panels as |value| in dB instead of signed values.
    #[arg(long)]
    pub wvd_db: bool,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long)]
    pub f1: f64,
    #[arg(long)]
    pub f2: f64,
}
