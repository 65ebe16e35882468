//! Discrete Fourier machinery and analytic-signal construction.
//!
//! Convention: the forward transform is unnormalized,
//! `X[k] = sum_n x[n] exp(-j 2 pi k n / N)`, and the inverse carries `1/N`.
//! Bin `k` of a length-`N` transform corresponds to `k * fs / N`.
//!
//! Any length is supported exactly. Plans come from rustfft (mixed radix
//! plus Bluestein for large primes) and are cached per thread.

use std::cell::RefCell;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Result, TfError};
use crate::signal::{ComplexSignal, RealSignal};

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn plan(n: usize, forward: bool) -> Arc<dyn Fft<f64>> {
    PLANNER.with(|p| {
        let mut p = p.borrow_mut();
        if forward {
            p.plan_fft_forward(n)
        } else {
            p.plan_fft_inverse(n)
        }
    })
}

/// In-place unnormalized forward transform.
pub(crate) fn fft_in_place(buf: &mut [Complex64]) {
    if buf.len() > 1 {
        plan(buf.len(), true).process(buf);
    }
}

/// In-place inverse transform including the `1/N` factor.
pub(crate) fn ifft_in_place(buf: &mut [Complex64]) {
    let n = buf.len();
    if n > 1 {
        plan(n, false).process(buf);
    }
    let scale = 1.0 / n as f64;
    for v in buf.iter_mut() {
        *v *= scale;
    }
}

/// Forward DFT of `x` zero-padded or truncated to `n` points.
pub fn dft_forward(x: &[Complex64], n: usize) -> Result<Vec<Complex64>> {
    if n == 0 {
        return Err(TfError::InvalidLength("transform length must be at least 1".into()));
    }
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    let take = x.len().min(n);
    buf[..take].copy_from_slice(&x[..take]);
    fft_in_place(&mut buf);
    Ok(buf)
}

/// Forward DFT of real samples, zero-padded or truncated to `n` points.
pub fn dft_forward_real(x: &[f64], n: usize) -> Result<Vec<Complex64>> {
    let widened: Vec<Complex64> = x.iter().take(n).map(|&v| Complex64::new(v, 0.0)).collect();
    dft_forward(&widened, n)
}

/// Inverse DFT with `1/N` normalization.
pub fn dft_inverse(spectrum: &[Complex64]) -> Result<Vec<Complex64>> {
    if spectrum.is_empty() {
        return Err(TfError::InvalidLength("inverse transform of an empty spectrum".into()));
    }
    let mut buf = spectrum.to_vec();
    ifft_in_place(&mut buf);
    Ok(buf)
}

/// Frequency of DFT bin `k` for an `n`-point transform, mapped to
/// `[-fs/2, fs/2)` (two-sided).
pub fn bin_frequency_two_sided(k: usize, n: usize, sample_rate: f64) -> f64 {
    let k = k as f64;
    let n_f = n as f64;
    if k < n_f / 2.0 {
        k * sample_rate / n_f
    } else {
        (k - n_f) * sample_rate / n_f
    }
}

/// Analytic signal by the frequency-domain construction: DC kept, positive
/// bins doubled, negative bins zeroed, and for even lengths the Nyquist bin
/// kept unchanged.
///
/// The real part of the result reproduces the input.
pub fn analytic_signal(x: &RealSignal) -> Result<ComplexSignal> {
    let n = x.len();
    if n < 2 {
        return Err(TfError::InvalidLength(format!(
            "analytic signal needs at least 2 samples, got {n}"
        )));
    }
    let mut spec = dft_forward_real(x.samples(), n)?;
    let half = n / 2;
    for (k, v) in spec.iter_mut().enumerate().skip(1) {
        if n.is_multiple_of(2) && k == half {
            continue;
        }
        if k <= (n - 1) / 2 {
            *v *= 2.0;
        } else {
            *v = Complex64::new(0.0, 0.0);
        }
    }
    ifft_in_place(&mut spec);
    ComplexSignal::new(spec, x.sample_rate())
}

/// Two-times band-limited interpolation of an analytic signal.
///
/// The spectrum is zero-extended on the negative side so the result stays
/// analytic, and even-indexed output samples reproduce the input up to
/// rounding.
pub(crate) fn upsample2_analytic(x: &ComplexSignal) -> ComplexSignal {
    let n = x.len();
    let spec = dft_forward(x.samples(), n).expect("signal is nonempty");
    let mut up = vec![Complex64::new(0.0, 0.0); 2 * n];
    // Positive bins (and Nyquist for even n) stay in the lower half; any
    // residual negative bins go to the top of the doubled spectrum.
    let split = n / 2 + 1;
    for k in 0..split.min(n) {
        up[k] = spec[k] * 2.0;
    }
    for k in split..n {
        up[n + k] = spec[k] * 2.0;
    }
    ifft_in_place(&mut up);
    ComplexSignal::new(up, 2.0 * x.sample_rate()).expect("rate is positive")
}
