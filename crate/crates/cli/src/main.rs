mod args;

use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;

use tfkit::forge::{load_signal, synthesize, write_signal, SignalFormat, SignalKind, SignalSpec};
use tfkit::gallery::{self, GalleryOptions};
use tfkit::grid::{
    read_grid, render, write_grid, Colormap, DisplayScale, GridFormat, Normalize, RenderSpec,
};
use tfkit::linear::{gabor, gaussian_support_len, make_window, spectrogram, stft, Window, WindowKind};
use tfkit::multiscale::{
    cwt_with, scalogram, stockwell_power, stockwell_with, Boundary, MorletParams, ScaleGrid,
};
use tfkit::quadratic::{cross_term_report, smooth, wvd_with, SmoothingKernel, WvdOptions};
use tfkit::{RealSignal, TfGrid};

use args::*;

/// Default Gaussian standard deviation when neither alpha nor a length is given.
const DEFAULT_SIGMA_SAMPLES: f64 = 32.0;
const DEFAULT_WINDOW_LEN: usize = 256;

fn signal_format(path: &Path, explicit: Option<SignalFileFormat>) -> SignalFormat {
    let fmt = explicit.unwrap_or_else(|| {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
            Some("wav") => SignalFileFormat::Wav,
            Some("csv") => SignalFileFormat::Csv,
            _ => SignalFileFormat::Raw,
        }
    });
    match fmt {
        SignalFileFormat::Wav => SignalFormat::WavPcm16Mono,
        SignalFileFormat::Raw => SignalFormat::RawF64,
        SignalFileFormat::Csv => SignalFormat::Csv,
    }
}

fn gen(a: GenArgs) -> Result<()> {
    let need = |v: Option<f64>, name: &str| v.with_context(|| format!("--{name} is required for this kind"));
    let kind = match a.kind {
        Kind::Tone => SignalKind::Tone { freq: need(a.freq, "freq")? },
        Kind::Chirp => SignalKind::LinearChirp {
            f_start: need(a.f_start, "f-start")?,
            f_end: need(a.f_end, "f-end")?,
        },
        Kind::Pulse => SignalKind::GaussianPulse {
            freq: need(a.freq, "freq")?,
            center: a.center.unwrap_or(a.duration / 2.0),
            width: need(a.width, "width")?,
        },
        Kind::Burst => SignalKind::SineBurst {
            freq: need(a.freq, "freq")?,
            center: a.center.unwrap_or(a.duration / 2.0),
            width: need(a.width, "width")?,
        },
        Kind::Step => SignalKind::FreqStep {
            step_times: a.step_times,
            freqs: a.freqs,
        },
        Kind::Noise => SignalKind::WhiteNoise { seed: a.seed },
    };
    let x = synthesize(&SignalSpec::new(kind, a.amplitude, a.duration, a.sample_rate))?;
    write_signal(&x, &a.out, signal_format(&a.out, a.format))?;
    Ok(())
}

fn default_alpha(fs: f64, window_len: Option<usize>) -> f64 {
    let sigma_samples = window_len.map_or(DEFAULT_SIGMA_SAMPLES, |l| l as f64 / 8.0);
    let sigma = sigma_samples / fs;
    1.0 / (2.0 * sigma * sigma)
}

fn transform_grid(x: &RealSignal, a: &TransformArgs) -> Result<TfGrid> {
    let fs = x.sample_rate();
    let boundary = match a.boundary {
        BoundaryArg::Periodic => Boundary::Periodic,
        BoundaryArg::ZeroPad => Boundary::ZeroPad,
    };
    let wvd_opts = WvdOptions {
        max_lag: a.max_lag,
        n_freq: a.n_freq,
        no_upsample: a.no_upsample,
    };
    let window_defaults = |len: usize| (a.hop.unwrap_or((len / 4).max(1)), a.nfft.unwrap_or(len.next_power_of_two()));
    Ok(match a.method {
        Method::Gabor => {
            let alpha = a.alpha.unwrap_or_else(|| default_alpha(fs, None));
            let (hop, nfft) = window_defaults(gaussian_support_len(alpha, fs));
            gabor(x, alpha, hop, nfft)?
        }
        Method::Stft => {
            let w = match (a.window, a.window_len) {
                (WindowArg::Gaussian, None) => {
                    Window::gaussian(a.alpha.unwrap_or_else(|| default_alpha(fs, None)), fs)?
                }
                (WindowArg::Gaussian, Some(len)) => make_window(
                    WindowKind::Gaussian,
                    len,
                    Some(a.alpha.unwrap_or_else(|| default_alpha(fs, Some(len)))),
                    fs,
                )?,
                (WindowArg::Hann, len) => make_window(WindowKind::Hann, len.unwrap_or(DEFAULT_WINDOW_LEN), None, fs)?,
                (WindowArg::Rect, len) => {
                    make_window(WindowKind::Rectangular, len.unwrap_or(DEFAULT_WINDOW_LEN), None, fs)?
                }
            };
            let (hop, nfft) = window_defaults(w.len());
            spectrogram(&stft(x, &w, hop, nfft)?)
        }
        Method::Cwt => {
            let p = match a.cycles {
                Some(c) => MorletParams::with_cycles(a.center_freq, c)?,
                None => MorletParams {
                    center_freq: a.center_freq,
                    ..MorletParams::default()
                },
            };
            let f_max = a.f_max.unwrap_or(0.45 * fs);
            let f_min = a.f_min.unwrap_or((f_max / 64.0).max(4.0 * fs / x.len() as f64).min(f_max));
            let grid = ScaleGrid::geometric(&p, f_min, f_max, a.voices)?;
            scalogram(&cwt_with(x, &p, &grid, boundary)?)
        }
        Method::Stockwell => stockwell_power(&stockwell_with(
            x,
            a.f_min.unwrap_or(0.0),
            a.f_max.unwrap_or(fs / 2.0),
            boundary,
        )?),
        Method::Wvd => wvd_with(x, &wvd_opts)?.grid,
        Method::Spwvd => {
            let w = wvd_with(x, &wvd_opts)?.grid;
            let kernel = match (a.time_kernel, a.freq_kernel) {
                (None, None) => SmoothingKernel::default_for(w.n_time(), w.n_freq())?,
                (t, f) => {
                    let d = SmoothingKernel::default_for(w.n_time(), w.n_freq())?;
                    SmoothingKernel::gaussian(t.unwrap_or(d.time().len()), f.unwrap_or(d.freq().len()))?
                }
            };
            smooth(&w, &kernel)?
        }
    })
}

fn transform(a: TransformArgs) -> Result<()> {
    let x = load_signal(&a.input, signal_format(&a.input, a.input_format), a.sample_rate)?;
    let grid = transform_grid(&x, &a)?;
    let format = match a.grid_format {
        GridFileFormat::Tfgrid => GridFormat::Tfgrid,
        GridFileFormat::Csv => GridFormat::Csv,
    };
    write_grid(&grid, &a.out, format)?;
    log::info!(
        "{}: {} bins x {} frames -> {}",
        grid.kind().name(),
        grid.n_freq(),
        grid.n_time(),
        a.out.display()
    );
    Ok(())
}

fn render_cmd(a: RenderArgs) -> Result<()> {
    let grid = read_grid(&a.input)?;
    let spec = RenderSpec {
        colormap: match a.colormap {
            ColormapArg::Viridis => Colormap::Viridis,
            ColormapArg::Grayscale => Colormap::Grayscale,
            ColormapArg::Diverging => Colormap::Diverging,
        },
        db_floor: a.db_floor,
        normalize: match a.normalize {
            NormalizeArg::Max => Normalize::PerGridMax,
            NormalizeArg::Absolute => Normalize::Absolute,
        },
        display: match a.display {
            DisplayArg::Db => DisplayScale::Decibel,
            DisplayArg::Linear => DisplayScale::Linear,
            DisplayArg::Signed => DisplayScale::Signed,
        },
        log_freq_axis: match (a.log_freq, a.linear_freq) {
            (true, _) => Some(true),
            (_, true) => Some(false),
            _ => None,
        },
        width: a.width,
        height: a.height,
    };
    render(&grid, &spec, &a.out)?;
    Ok(())
}

fn gallery_cmd(a: GalleryArgs) -> Result<()> {
    let opts = GalleryOptions {
        sample_rate: a.sample_rate,
        duration: a.duration,
        width: a.width,
        height: a.height,
        wvd_display: if a.wvd_db { DisplayScale::Decibel } else { DisplayScale::Signed },
    };
    let paths = gallery::run(&a.out, &opts)?;
    for p in &paths {
        println!("{}", p.display());
    }
    Ok(())
}

fn report(a: ReportArgs) -> Result<()> {
    let grid = read_grid(&a.input)?;
    let r = cross_term_report(&grid, a.f1, a.f2)?;
    println!("{}", serde_json::to_string_pretty(&r)?);
    Ok(())
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("TFKIT_THREADS") {
        let n: usize = v.parse().with_context(|| format!("TFKIT_THREADS={v} is not a thread count"))?;
        if n == 0 {
            bail!("TFKIT_THREADS must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    init_threads()?;
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::Transform(a) => transform(a),
        Command::Render(a) => render_cmd(a),
        Command::Gallery(a) => gallery_cmd(a),
        Command::Report(a) => report(a),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
