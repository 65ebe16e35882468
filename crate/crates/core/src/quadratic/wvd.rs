//! Discrete Wigner-Ville distribution.
//!
//! The real input is replaced by its analytic signal, then every time index
//! gets the DFT of its lag products over `m`. Lag `m` spans `2m` samples,
//! so bin `k` of an `L`-point lag DFT sits at `k fs / (2 L)`.
//!
//! By default the analytic signal is first interpolated to twice the rate.
//! Lags then step by one original sample, the lag DFT has `2 n_freq`
//! points and only its lower half (`[0, fs/2)`) is published. Without
//! upsampling the lag DFT has `n_freq` points and all of them are kept.
//!
//! Summing a column over the published bins gives
//! `marginal_scale * |z[n]|^2`, up to leakage outside the band.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::engine::{analytic_signal, fft_in_place, upsample2_analytic};
use crate::error::{Result, TfError};
use crate::grid::{TfGrid, TransformKind, ValueScale};
use crate::signal::RealSignal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WvdOptions {
    /// Largest lag index `M` (`2M` samples of separation). Defaults to `N/2`.
    pub max_lag: Option<usize>,
    /// Published frequency bins. Defaults to `2M`; must be at least `2M`.
    pub n_freq: Option<usize>,
    /// Skip the two-times interpolation. Content above `fs/4` then folds.
    pub no_upsample: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WvdOutput {
    pub grid: TfGrid,
    /// Largest imaginary part seen before it was discarded.
    pub imag_residual: f64,
    /// Time indices whose lag window lies fully inside the signal.
    pub interior: Option<(usize, usize)>,
    /// Column sums over frequency equal this factor times the instantaneous
    /// power of the analytic signal.
    pub marginal_scale: f64,
}

pub const MIN_LEN: usize = 4;

pub fn wvd(x: &RealSignal) -> Result<TfGrid> {
    Ok(wvd_with(x, &WvdOptions::default())?.grid)
}

pub fn wvd_with(x: &RealSignal, opts: &WvdOptions) -> Result<WvdOutput> {
    let n = x.len();
    if n < MIN_LEN {
        return Err(TfError::InvalidLength(format!(
            "Wigner-Ville needs at least {MIN_LEN} samples, got {n}"
        )));
    }
    let max_lag = opts.max_lag.unwrap_or(n / 2);
    if max_lag == 0 || max_lag > n / 2 {
        return Err(TfError::InvalidLag(format!(
            "max lag must be in [1, {}], got {max_lag}",
            n / 2
        )));
    }
    let n_freq = opts.n_freq.unwrap_or(2 * max_lag);
    if n_freq < 2 * max_lag {
        return Err(TfError::InvalidLength(format!(
            "n_freq {n_freq} is below twice the max lag ({})",
            2 * max_lag
        )));
    }
    let fs = x.sample_rate();
    let z = analytic_signal(x)?;

    // Work signal, its stride per original sample, lag count and DFT length.
    let (work, stride, lags, dft_len) = if opts.no_upsample {
        (z, 1usize, max_lag, n_freq)
    } else {
        (upsample2_analytic(&z), 2, 2 * max_lag, 2 * n_freq)
    };
    let s = work.samples();
    let len = s.len() as isize;
    let half = dft_len / 2;

    let columns: Vec<(Vec<f64>, f64)> = (0..n)
        .into_par_iter()
        .map(|t| {
            let c = (t * stride) as isize;
            let mut buf = vec![Complex64::new(0.0, 0.0); dft_len];
            let product = |m: isize| {
                let (a, b) = (c + m, c - m);
                if a >= 0 && b >= 0 && a < len && b < len {
                    s[a as usize] * s[b as usize].conj()
                } else {
                    Complex64::new(0.0, 0.0)
                }
            };
            buf[0] = product(0);
            for m in 1..=lags as isize {
                let r = product(m);
                if m as usize == half {
                    // Lags +-half share a bin; half weight each keeps it real.
                    buf[half] = Complex64::new(r.re, 0.0);
                } else {
                    buf[m as usize] = r;
                    buf[dft_len - m as usize] = r.conj();
                }
            }
            fft_in_place(&mut buf);
            let residual = buf[..n_freq].iter().map(|v| v.im.abs()).fold(0.0, f64::max);
            (buf[..n_freq].iter().map(|v| v.re).collect(), residual)
        })
        .collect();

    let imag_residual = columns.iter().map(|c| c.1).fold(0.0, f64::max);
    let peak = columns
        .iter()
        .flat_map(|c| c.0.iter())
        .map(|v| v.abs())
        .fold(0.0, f64::max);
    if imag_residual > 1e-9 * peak.max(1.0) {
        return Err(TfError::Consistency(format!(
            "Wigner-Ville imaginary residual {imag_residual:e} exceeds tolerance (peak {peak:e})"
        )));
    }

    let mut values = vec![0.0; n_freq * n];
    for (t, (col, _)) in columns.iter().enumerate() {
        for (k, v) in col.iter().enumerate() {
            values[k * n + t] = *v;
        }
    }
    let grid = TfGrid::new(
        values,
        (0..n_freq).map(|k| k as f64 * fs / (2 * n_freq) as f64).collect(),
        (0..n).map(|t| t as f64 / fs).collect(),
        TransformKind::Wvd,
        ValueScale::Linear,
    )?;
    let interior = (max_lag <= n - 1 - max_lag).then(|| (max_lag, n - 1 - max_lag));
    Ok(WvdOutput {
        grid,
        imag_residual,
        interior,
        marginal_scale: dft_len as f64,
    })
}
