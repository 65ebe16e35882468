//! Stockwell transform, computed per analysis frequency from the shifted
//! spectrum: `ST[t, k] = IDFT_m { X[m + k] exp(-2 pi^2 m^2 / k^2) }[t]`.
//!
//! With this normalization `sum_t ST[t, k] = X[k]`, so the time average of
//! every row equals the unnormalized DFT divided by the transform length.
//! Row `k = 0` is the signal mean at every `t`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::engine::{fft_in_place, ifft_in_place};
use crate::error::{Result, TfError};
use crate::grid::{ComplexTfGrid, TfGrid, TransformKind};
use crate::multiscale::Boundary;
use crate::signal::RealSignal;

pub fn stockwell(x: &RealSignal, f_lo: f64, f_hi: f64) -> Result<ComplexTfGrid> {
    stockwell_with(x, f_lo, f_hi, Boundary::Periodic)
}

/// Rows cover the DFT bins in `[f_lo, f_hi]`. Zero padding doubles the
/// transform length, which also halves the bin spacing.
pub fn stockwell_with(x: &RealSignal, f_lo: f64, f_hi: f64, boundary: Boundary) -> Result<ComplexTfGrid> {
    let fs = x.sample_rate();
    let nyquist = fs / 2.0;
    if !(f_lo >= 0.0 && f_lo < f_hi) {
        return Err(TfError::InvalidBand {
            lo: f_lo,
            hi: f_hi,
            reason: "need 0 <= f_lo < f_hi".into(),
        });
    }
    if f_hi > nyquist {
        return Err(TfError::OutOfBand { freq: f_hi, nyquist });
    }
    let n = x.len();
    let len = match boundary {
        Boundary::Periodic => n,
        Boundary::ZeroPad => 2 * n,
    };
    let df = fs / len as f64;
    let k_lo = (f_lo / df - 1e-9).ceil().max(0.0) as usize;
    let k_hi = ((f_hi / df + 1e-9).floor() as usize).min(len / 2);
    if k_lo > k_hi {
        return Err(TfError::InvalidBand {
            lo: f_lo,
            hi: f_hi,
            reason: format!("band contains no frequency bin (spacing {df} Hz)"),
        });
    }

    let mut spectrum = vec![Complex64::new(0.0, 0.0); len];
    for (s, &v) in spectrum.iter_mut().zip(x.samples()) {
        *s = Complex64::new(v, 0.0);
    }
    fft_in_place(&mut spectrum);

    let rows: Vec<Vec<Complex64>> = (k_lo..=k_hi)
        .into_par_iter()
        .map(|k| {
            if k == 0 {
                return vec![spectrum[0] / len as f64; n];
            }
            let kf = k as f64;
            let mut voice: Vec<Complex64> = (0..len)
                .map(|m| {
                    let mw = if m <= len / 2 { m as f64 } else { m as f64 - len as f64 };
                    spectrum[(m + k) % len] * (-2.0 * PI * PI * mw * mw / (kf * kf)).exp()
                })
                .collect();
            ifft_in_place(&mut voice);
            voice.truncate(n);
            voice
        })
        .collect();

    Ok(ComplexTfGrid {
        values: rows.into_iter().flatten().collect(),
        freq_axis: (k_lo..=k_hi).map(|k| k as f64 * df).collect(),
        time_axis: (0..n).map(|t| t as f64 / fs).collect(),
    })
}

/// `|ST|^2`.
pub fn stockwell_power(st: &ComplexTfGrid) -> TfGrid {
    st.power(TransformKind::Stockwell)
}
