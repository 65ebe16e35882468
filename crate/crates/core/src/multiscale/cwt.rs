//! Continuous wavelet transform with the Morlet wavelet
//! `psi(t) = exp(-alpha t^2) exp(j 2 pi f_c t)`.
//!
//! Scale `a` is a dimensionless dilation; row `a` holds
//! `(1 / sqrt(a)) sum_n x[n] conj(psi((n - b) / (a fs)))` for every integer
//! shift `b`, and is published at frequency `f_c / a`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::engine::{fft_in_place, ifft_in_place};
use crate::error::{Result, TfError};
use crate::grid::{ComplexTfGrid, TfGrid, TransformKind};
use crate::multiscale::Boundary;
use crate::signal::RealSignal;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorletParams {
    /// Center frequency of the mother wavelet, Hz.
    pub center_freq: f64,
    /// Gaussian width parameter, 1/s^2.
    pub alpha: f64,
}

impl Default for MorletParams {
    /// `f_c = 1 Hz` with the common `2 pi f_c sigma = 6` envelope.
    fn default() -> Self {
        Self::with_cycles(1.0, 6.0 / (2.0 * PI)).expect("valid constants")
    }
}

impl MorletParams {
    pub fn new(center_freq: f64, alpha: f64) -> Result<Self> {
        if !(center_freq.is_finite() && center_freq > 0.0) {
            return Err(TfError::InvalidSpec(format!(
                "Morlet center frequency must be positive, got {center_freq}"
            )));
        }
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(TfError::InvalidSpec(format!(
                "Morlet alpha must be positive, got {alpha}"
            )));
        }
        Ok(Self { center_freq, alpha })
    }

    /// Parameters whose envelope standard deviation spans `cycles` periods
    /// of the center frequency.
    pub fn with_cycles(center_freq: f64, cycles: f64) -> Result<Self> {
        let sigma = cycles / center_freq;
        Self::new(center_freq, 1.0 / (2.0 * sigma * sigma))
    }

    /// Envelope standard deviation of the mother wavelet, seconds.
    pub fn sigma(&self) -> f64 {
        (1.0 / (2.0 * self.alpha)).sqrt()
    }

    pub fn scale_for(&self, freq: f64) -> f64 {
        self.center_freq / freq
    }

    pub fn freq_for(&self, scale: f64) -> f64 {
        self.center_freq / scale
    }
}

/// Sampled wavelet; `samples[center]` is `t = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Wavelet {
    pub samples: Vec<Complex64>,
    pub center: usize,
}

/// Samples `psi(t / a)` at `t = k / fs` over +-4 sigma a.
pub fn morlet_wavelet(p: &MorletParams, scale: f64, sample_rate: f64) -> Result<Wavelet> {
    if !(scale.is_finite() && scale > 0.0) {
        return Err(TfError::InvalidScale(scale));
    }
    let half = (4.0 * p.sigma() * scale * sample_rate).ceil() as usize;
    let samples = (0..=2 * half)
        .map(|i| {
            let u = (i as f64 - half as f64) / sample_rate / scale;
            Complex64::from_polar((-p.alpha * u * u).exp(), 2.0 * PI * p.center_freq * u)
        })
        .collect();
    Ok(Wavelet {
        samples,
        center: half,
    })
}

/// Scales ordered by increasing analysis frequency (decreasing scale).
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleGrid {
    scales: Vec<f64>,
    freqs: Vec<f64>,
    voices_per_octave: usize,
}

impl ScaleGrid {
    pub const DEFAULT_VOICES: usize = 12;

    /// Geometric grid `f_min * 2^(i / voices)` up to `f_max`.
    pub fn geometric(p: &MorletParams, f_min: f64, f_max: f64, voices_per_octave: usize) -> Result<Self> {
        if !(f_min.is_finite() && f_min > 0.0 && f_max.is_finite() && f_max >= f_min) {
            return Err(TfError::InvalidGrid(format!(
                "need 0 < f_min <= f_max, got [{f_min}, {f_max}]"
            )));
        }
        if voices_per_octave == 0 {
            return Err(TfError::InvalidGrid("voices per octave must be at least 1".into()));
        }
        let octaves = (f_max / f_min).log2();
        let steps = (octaves * voices_per_octave as f64 + 1e-9).floor() as usize;
        let freqs: Vec<f64> = (0..=steps)
            .map(|i| f_min * 2f64.powf(i as f64 / voices_per_octave as f64))
            .collect();
        let scales = freqs.iter().map(|&f| p.scale_for(f)).collect();
        Ok(Self {
            scales,
            freqs,
            voices_per_octave,
        })
    }

    /// Explicit scales, which must be positive and strictly decreasing.
    pub fn from_scales(p: &MorletParams, scales: Vec<f64>) -> Result<Self> {
        if scales.is_empty() {
            return Err(TfError::InvalidGrid("scale grid is empty".into()));
        }
        if let Some(&bad) = scales.iter().find(|s| !(s.is_finite() && **s > 0.0)) {
            return Err(TfError::InvalidScale(bad));
        }
        if scales.windows(2).any(|w| w[1] >= w[0]) {
            return Err(TfError::InvalidGrid(
                "scales must be strictly decreasing (increasing frequency)".into(),
            ));
        }
        let freqs = scales.iter().map(|&a| p.freq_for(a)).collect();
        Ok(Self {
            scales,
            freqs,
            voices_per_octave: 0,
        })
    }

    pub fn scales(&self) -> &[f64] {
        &self.scales
    }

    pub fn frequencies(&self) -> &[f64] {
        &self.freqs
    }

    /// Zero for grids built from explicit scales.
    pub fn voices_per_octave(&self) -> usize {
        self.voices_per_octave
    }

    pub fn len(&self) -> usize {
        self.scales.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scales.is_empty()
    }

    /// Index of the scale closest to `scale`.
    pub fn nearest_scale(&self, scale: f64) -> usize {
        self.scales
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - scale).abs().total_cmp(&(b.1 - scale).abs()))
            .map(|(i, _)| i)
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cwt {
    /// Rows follow the scale grid order (increasing frequency).
    pub coeffs: ComplexTfGrid,
    pub scales: Vec<f64>,
}

pub fn cwt(x: &RealSignal, p: &MorletParams, grid: &ScaleGrid) -> Result<Cwt> {
    cwt_with(x, p, grid, Boundary::Periodic)
}

pub fn cwt_with(x: &RealSignal, p: &MorletParams, grid: &ScaleGrid, boundary: Boundary) -> Result<Cwt> {
    if grid.is_empty() {
        return Err(TfError::InvalidGrid("scale grid is empty".into()));
    }
    let n = x.len();
    let fs = x.sample_rate();
    let max_scale = grid.scales().iter().cloned().fold(0.0, f64::max);
    let max_half = (4.0 * p.sigma() * max_scale * fs).ceil() as usize;
    if 2 * max_half + 1 > 4 * n {
        log::warn!(
            "wavelet support at scale {max_scale} ({} samples) exceeds 4x the signal length ({n}); coarse rows are truncated",
            2 * max_half + 1
        );
    }
    let len = match boundary {
        Boundary::Periodic => n,
        Boundary::ZeroPad => (n + max_half).next_power_of_two(),
    };
    let mut spectrum = vec![Complex64::new(0.0, 0.0); len];
    for (s, &v) in spectrum.iter_mut().zip(x.samples()) {
        *s = Complex64::new(v, 0.0);
    }
    fft_in_place(&mut spectrum);

    let rows: Vec<Vec<Complex64>> = grid
        .scales()
        .par_iter()
        .map(|&a| -> Result<Vec<Complex64>> {
            let w = morlet_wavelet(p, a, fs)?;
            // Correlation with conj(psi) as a circular convolution with the
            // time-reversed conjugate wavelet.
            let mut kernel = vec![Complex64::new(0.0, 0.0); len];
            for (i, z) in w.samples.iter().enumerate() {
                let k = i as isize - w.center as isize;
                let idx = (-k).rem_euclid(len as isize) as usize;
                kernel[idx] += z.conj();
            }
            fft_in_place(&mut kernel);
            for (k, s) in kernel.iter_mut().zip(&spectrum) {
                *k *= s;
            }
            ifft_in_place(&mut kernel);
            let norm = 1.0 / a.sqrt();
            kernel.truncate(n);
            for v in kernel.iter_mut() {
                *v *= norm;
            }
            Ok(kernel)
        })
        .collect::<Result<_>>()?;

    Ok(Cwt {
        coeffs: ComplexTfGrid {
            values: rows.into_iter().flatten().collect(),
            freq_axis: grid.frequencies().to_vec(),
            time_axis: (0..n).map(|b| b as f64 / fs).collect(),
        },
        scales: grid.scales().to_vec(),
    })
}

/// `|CWT|^2`, flagged for logarithmic frequency display.
pub fn scalogram(c: &Cwt) -> TfGrid {
    c.coeffs.power(TransformKind::Scalogram).with_log_freq(true)
}
