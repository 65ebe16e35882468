//! Synthetic test signals and loaders for recorded data.
//!
//! Every generator samples at `t = n / fs` for `n in 0..round(duration * fs)`.
//! Noise is drawn from a seeded ChaCha generator so identical specs give
//! bit-identical output.

mod io;

use std::f64::consts::PI;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Result, TfError};
use crate::signal::RealSignal;

pub use io::{load_signal, write_signal, SignalFormat};

/// Shape of a synthetic signal.
#[derive(Debug, Clone, PartialEq)]
pub enum SignalKind {
    /// `cos(2 pi f t)`.
    Tone { freq: f64 },
    /// Instantaneous frequency moving linearly from `f_start` at `t = 0` to
    /// `f_end` at `t = duration`.
    LinearChirp { f_start: f64, f_end: f64 },
    /// Tone under a Gaussian envelope `exp(-(t - center)^2 / (2 width^2))`.
    GaussianPulse { freq: f64, center: f64, width: f64 },
    /// Piecewise-constant frequency. `freqs[0]` holds until `step_times[0]`,
    /// `freqs[i]` from `step_times[i - 1]` to `step_times[i]`, and so on.
    /// Phase is continuous across steps.
    FreqStep { step_times: Vec<f64>, freqs: Vec<f64> },
    /// Tone gated to `[center - width/2, center + width/2]`, zero elsewhere.
    SineBurst { freq: f64, center: f64, width: f64 },
    /// Gaussian white noise with standard deviation `amplitude`.
    WhiteNoise { seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignalSpec {
    pub kind: SignalKind,
    pub amplitude: f64,
    /// Seconds.
    pub duration: f64,
    /// Hz.
    pub sample_rate: f64,
}

impl SignalSpec {
    pub fn new(kind: SignalKind, amplitude: f64, duration: f64, sample_rate: f64) -> Self {
        Self {
            kind,
            amplitude,
            duration,
            sample_rate,
        }
    }

    pub fn len(&self) -> usize {
        (self.duration * self.sample_rate).round() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.duration.is_finite() && self.duration > 0.0) {
            return Err(TfError::InvalidSpec(format!(
                "duration must be positive, got {}",
                self.duration
            )));
        }
        if !(self.sample_rate.is_finite() && self.sample_rate > 0.0) {
            return Err(TfError::InvalidSpec(format!(
                "sample rate must be positive, got {}",
                self.sample_rate
            )));
        }
        if !self.amplitude.is_finite() {
            return Err(TfError::InvalidSpec("amplitude must be finite".into()));
        }
        if self.is_empty() {
            return Err(TfError::InvalidSpec(
                "duration * sample_rate rounds to zero samples".into(),
            ));
        }
        let nyquist = self.sample_rate / 2.0;
        let check_freq = |freq: f64| -> Result<()> {
            if !(freq.is_finite() && (0.0..=nyquist).contains(&freq)) {
                return Err(TfError::OutOfBand { freq, nyquist });
            }
            Ok(())
        };
        let check_width = |width: f64| -> Result<()> {
            if !(width.is_finite() && width > 0.0) {
                return Err(TfError::InvalidSpec(format!("width must be positive, got {width}")));
            }
            Ok(())
        };
        match &self.kind {
            SignalKind::Tone { freq } => check_freq(*freq)?,
            SignalKind::LinearChirp { f_start, f_end } => {
                check_freq(*f_start)?;
                check_freq(*f_end)?;
            }
            SignalKind::GaussianPulse { freq, width, center }
            | SignalKind::SineBurst { freq, width, center } => {
                check_freq(*freq)?;
                check_width(*width)?;
                if !center.is_finite() {
                    return Err(TfError::InvalidSpec("center time must be finite".into()));
                }
            }
            SignalKind::FreqStep { step_times, freqs } => {
                if freqs.len() != step_times.len() + 1 {
                    return Err(TfError::InvalidSpec(format!(
                        "frequency step needs one more frequency than step times ({} times, {} frequencies)",
                        step_times.len(),
                        freqs.len()
                    )));
                }
                for &f in freqs {
                    check_freq(f)?;
                }
                for &t in step_times {
                    if !(0.0..=self.duration).contains(&t) {
                        return Err(TfError::InvalidSpec(format!(
                            "step time {t} s outside [0, {}] s",
                            self.duration
                        )));
                    }
                }
                if step_times.windows(2).any(|w| w[1] <= w[0]) {
                    return Err(TfError::InvalidSpec(
                        "step times must be strictly increasing".into(),
                    ));
                }
            }
            SignalKind::WhiteNoise { .. } => {}
        }
        Ok(())
    }
}

/// Renders a [`SignalSpec`] into samples.
pub fn synthesize(spec: &SignalSpec) -> Result<RealSignal> {
    spec.validate()?;
    let n = spec.len();
    let fs = spec.sample_rate;
    let amp = spec.amplitude;
    let time = |i: usize| i as f64 / fs;

    let samples: Vec<f64> = match &spec.kind {
        SignalKind::Tone { freq } => (0..n)
            .map(|i| amp * (2.0 * PI * (freq * time(i))).cos())
            .collect(),
        SignalKind::LinearChirp { f_start, f_end } => {
            let rate = (f_end - f_start) / (2.0 * spec.duration);
            (0..n)
                .map(|i| {
                    let t = time(i);
                    amp * (2.0 * PI * (f_start * t + rate * t * t)).cos()
                })
                .collect()
        }
        SignalKind::GaussianPulse {
            freq,
            center,
            width,
        } => (0..n)
            .map(|i| {
                let t = time(i);
                let d = (t - center) / width;
                amp * (-0.5 * d * d).exp() * (2.0 * PI * (freq * t)).cos()
            })
            .collect(),
        SignalKind::SineBurst {
            freq,
            center,
            width,
        } => {
            let (lo, hi) = (center - width / 2.0, center + width / 2.0);
            (0..n)
                .map(|i| {
                    let t = time(i);
                    if t >= lo && t <= hi {
                        amp * (2.0 * PI * (freq * t)).cos()
                    } else {
                        0.0
                    }
                })
                .collect()
        }
        SignalKind::FreqStep { step_times, freqs } => {
            // Phase at the start of each segment, accumulated analytically so
            // the joins are continuous.
            let mut starts = Vec::with_capacity(freqs.len());
            let mut phase = 0.0;
            let mut seg_start = 0.0;
            for (i, &f) in freqs.iter().enumerate() {
                starts.push((seg_start, phase));
                if let Some(&end) = step_times.get(i) {
                    phase += 2.0 * PI * f * (end - seg_start);
                    seg_start = end;
                }
            }
            (0..n)
                .map(|i| {
                    let t = time(i);
                    let seg = step_times.partition_point(|&s| s <= t);
                    let (t0, p0) = starts[seg];
                    amp * (p0 + 2.0 * PI * freqs[seg] * (t - t0)).cos()
                })
                .collect()
        }
        SignalKind::WhiteNoise { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..n)
                .map(|_| {
                    let v: f64 = StandardNormal.sample(&mut rng);
                    amp * v
                })
                .collect()
        }
    };
    RealSignal::new(samples, fs)
}

/// Pointwise sum, zero-padded to the longest input.
pub fn mix(signals: &[RealSignal]) -> Result<RealSignal> {
    let first = signals
        .first()
        .ok_or_else(|| TfError::IncompatibleSignals("cannot mix an empty list".into()))?;
    let fs = first.sample_rate();
    if let Some(bad) = signals.iter().find(|s| s.sample_rate() != fs) {
        return Err(TfError::IncompatibleSignals(format!(
            "sample rates differ: {fs} Hz vs {} Hz",
            bad.sample_rate()
        )));
    }
    let len = signals.iter().map(RealSignal::len).max().unwrap_or(0);
    let mut out = vec![0.0; len];
    for s in signals {
        for (o, v) in out.iter_mut().zip(s.samples()) {
            *o += v;
        }
    }
    RealSignal::new(out, fs)
}
