//! Renders every transform for a fixed set of synthetic signals.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{Result, TfError};
use crate::forge::{mix, synthesize, SignalKind, SignalSpec};
use crate::grid::{render, Colormap, DisplayScale, RenderSpec, TfGrid};
use crate::linear::gabor;
use crate::multiscale::{cwt, scalogram, stockwell, stockwell_power, MorletParams, ScaleGrid};
use crate::quadratic::{smooth, wvd, SmoothingKernel};
use crate::signal::RealSignal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Panel {
    Gabor,
    Cwt,
    Stockwell,
    Wvd,
    Spwvd,
}

impl Panel {
    pub const ALL: [Panel; 5] = [Panel::Gabor, Panel::Cwt, Panel::Stockwell, Panel::Wvd, Panel::Spwvd];

    pub fn name(self) -> &'static str {
        match self {
            Panel::Gabor => "gabor",
            Panel::Cwt => "cwt",
            Panel::Stockwell => "stockwell",
            Panel::Wvd => "wvd",
            Panel::Spwvd => "spwvd",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GalleryOptions {
    pub sample_rate: f64,
    pub duration: f64,
    pub width: usize,
    pub height: usize,
    /// Display for WVD-family panels; the others always use dB.
    pub wvd_display: DisplayScale,
}

impl Default for GalleryOptions {
    fn default() -> Self {
        Self {
            sample_rate: 1000.0,
            duration: 1.0,
            width: 480,
            height: 270,
            wvd_display: DisplayScale::Signed,
        }
    }
}

/// The synthetic signal set, as `(name, signal)` pairs.
pub fn signals(opts: &GalleryOptions) -> Result<Vec<(&'static str, RealSignal)>> {
    let fs = opts.sample_rate;
    let d = opts.duration;
    let nyq = fs / 2.0;
    let spec = |kind| synthesize(&SignalSpec::new(kind, 1.0, d, fs));
    Ok(vec![
        ("tone", spec(SignalKind::Tone { freq: 0.2 * nyq })?),
        (
            "chirp",
            spec(SignalKind::LinearChirp {
                f_start: 0.1 * nyq,
                f_end: 0.8 * nyq,
            })?,
        ),
        (
            "pulse",
            spec(SignalKind::GaussianPulse {
                freq: 0.4 * nyq,
                center: 0.5 * d,
                width: 0.02 * d,
            })?,
        ),
        (
            "step",
            spec(SignalKind::FreqStep {
                step_times: vec![d / 3.0, 2.0 * d / 3.0],
                freqs: vec![0.16 * nyq, 0.5 * nyq, 0.3 * nyq],
            })?,
        ),
        (
            "burst",
            spec(SignalKind::SineBurst {
                freq: 0.6 * nyq,
                center: 0.5 * d,
                width: 0.2 * d,
            })?,
        ),
        ("noise", synthesize(&SignalSpec::new(SignalKind::WhiteNoise { seed: 7 }, 0.3, d, fs))?),
        (
            "two_tones",
            mix(&[spec(SignalKind::Tone { freq: 0.2 * nyq })?, spec(SignalKind::Tone { freq: 0.6 * nyq })?])?,
        ),
        (
            "tone_and_chirp",
            mix(&[
                spec(SignalKind::Tone { freq: 0.2 * nyq })?,
                spec(SignalKind::LinearChirp {
                    f_start: 0.4 * nyq,
                    f_end: 0.9 * nyq,
                })?,
            ])?,
        ),
    ])
}

/// Computes one panel with the gallery's fixed parameters.
pub fn compute_panel(x: &RealSignal, panel: Panel) -> Result<TfGrid> {
    let fs = x.sample_rate();
    let n = x.len();
    match panel {
        Panel::Gabor => {
            // Window standard deviation of n / 64 samples.
            let sigma = (n as f64 / 64.0).max(2.0) / fs;
            let alpha = 1.0 / (2.0 * sigma * sigma);
            let nfft = crate::linear::gaussian_support_len(alpha, fs).next_power_of_two().max(64);
            gabor(x, alpha, (n / 256).max(1), nfft)
        }
        Panel::Cwt => {
            let p = MorletParams::default();
            let f_max = 0.45 * fs;
            let f_min = (f_max / 64.0).max(4.0 * fs / n as f64).min(f_max);
            let grid = ScaleGrid::geometric(&p, f_min, f_max, ScaleGrid::DEFAULT_VOICES)?;
            Ok(scalogram(&cwt(x, &p, &grid)?))
        }
        Panel::Stockwell => Ok(stockwell_power(&stockwell(x, 0.0, fs / 2.0)?)),
        Panel::Wvd => wvd(x),
        Panel::Spwvd => {
            let w = wvd(x)?;
            smooth(&w, &SmoothingKernel::default_for(w.n_time(), w.n_freq())?)
        }
    }
}

fn render_spec(panel: Panel, opts: &GalleryOptions) -> RenderSpec {
    let mut spec = RenderSpec {
        width: opts.width,
        height: opts.height,
        ..RenderSpec::default()
    };
    if matches!(panel, Panel::Wvd | Panel::Spwvd) && opts.wvd_display == DisplayScale::Signed {
        spec.display = DisplayScale::Signed;
        spec.colormap = Colormap::Diverging;
    }
    spec
}

/// Writes `<signal>_<transform>.ppm` for every pair into `out_dir` and
/// returns the paths in a fixed order.
pub fn run(out_dir: impl AsRef<Path>, opts: &GalleryOptions) -> Result<Vec<PathBuf>> {
    let out_dir = out_dir.as_ref();
    fs::create_dir_all(out_dir).map_err(|e| TfError::io(out_dir, e))?;
    let sigs = signals(opts)?;
    let jobs: Vec<(&str, &RealSignal, Panel)> = sigs
        .iter()
        .flat_map(|(name, x)| Panel::ALL.iter().map(move |&p| (*name, x, p)))
        .collect();
    jobs.par_iter()
        .map(|&(name, x, panel)| {
            let grid = compute_panel(x, panel)?;
            let path = out_dir.join(format!("{name}_{}.ppm", panel.name()));
            log::info!("rendering {}", path.display());
            render(&grid, &render_spec(panel, opts), &path)?;
            Ok(path)
        })
        .collect()
}
