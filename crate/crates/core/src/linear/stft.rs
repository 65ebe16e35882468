use num_complex::Complex64;
use rayon::prelude::*;

use crate::engine::fft_in_place;
use crate::error::{Result, TfError};
use crate::grid::{ComplexTfGrid, TfGrid, TransformKind};
use crate::linear::window::Window;
use crate::signal::Signal;

/// Short-time Fourier transform.
///
/// The signal is zero-padded by half a window on each side so frame `m` is
/// centered on sample `m * hop` (time `m * hop / fs`); frames are produced
/// while the center stays inside the signal, giving
/// `floor((N - 1) / hop) + 1` frames. Each frame is `x * conj(w)` placed at
/// the start of an `nfft`-point buffer, so phase is referenced to the first
/// sample of the frame.
///
/// Real input yields the one-sided axis `0..=fs/2` (`nfft / 2 + 1` bins);
/// complex input yields all `nfft` bins over `[0, fs)`.
pub fn stft<S: Signal + Sync + ?Sized>(
    x: &S,
    window: &Window,
    hop: usize,
    nfft: usize,
) -> Result<ComplexTfGrid> {
    if hop == 0 {
        return Err(TfError::InvalidHop);
    }
    if nfft < window.len() {
        return Err(TfError::InvalidNfft {
            nfft,
            window: window.len(),
        });
    }
    let fs = x.sample_rate();
    if window.sample_rate() != fs {
        return Err(TfError::IncompatibleSignals(format!(
            "window built for {} Hz, signal sampled at {fs} Hz",
            window.sample_rate()
        )));
    }
    let n = x.len();
    let n_frames = (n - 1) / hop + 1;
    let n_bins = if x.is_real() { nfft / 2 + 1 } else { nfft };
    let center = window.center() as isize;
    let coeffs = window.coefficients();

    let frames: Vec<Vec<Complex64>> = (0..n_frames)
        .into_par_iter()
        .map(|m| {
            let mut buf = vec![Complex64::new(0.0, 0.0); nfft];
            let start = (m * hop) as isize - center;
            for (j, &w) in coeffs.iter().enumerate() {
                let idx = start + j as isize;
                if idx >= 0 && (idx as usize) < n {
                    buf[j] = x.at(idx as usize) * w;
                }
            }
            fft_in_place(&mut buf);
            buf.truncate(n_bins);
            buf
        })
        .collect();

    let mut values = vec![Complex64::new(0.0, 0.0); n_bins * n_frames];
    for (m, frame) in frames.iter().enumerate() {
        for (k, v) in frame.iter().enumerate() {
            values[k * n_frames + m] = *v;
        }
    }
    Ok(ComplexTfGrid {
        values,
        freq_axis: (0..n_bins).map(|k| k as f64 * fs / nfft as f64).collect(),
        time_axis: (0..n_frames).map(|m| (m * hop) as f64 / fs).collect(),
    })
}

/// Squared STFT magnitudes.
pub fn spectrogram(stft: &ComplexTfGrid) -> TfGrid {
    stft.power(TransformKind::Spectrogram)
}

/// Spectrogram with a Gaussian window `exp(-alpha t^2)` truncated at
/// +-4 sigma. Identical to composing [`Window::gaussian`], [`stft`] and
/// [`spectrogram`].
pub fn gabor<S: Signal + Sync + ?Sized>(x: &S, alpha: f64, hop: usize, nfft: usize) -> Result<TfGrid> {
    let window = Window::gaussian(alpha, x.sample_rate())?;
    Ok(spectrogram(&stft(x, &window, hop, nfft)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::window::{make_window, WindowKind};
    use crate::signal::{ComplexSignal, RealSignal};
    use std::f64::consts::PI;

    #[test]
    fn frame_count_and_axes() {
        let x = RealSignal::new(vec![0.0; 100], 10.0).unwrap();
        let w = make_window(WindowKind::Hann, 16, None, 10.0).unwrap();
        let s = stft(&x, &w, 7, 32).unwrap();
        assert_eq!(s.n_time(), 99 / 7 + 1);
        assert_eq!(s.n_freq(), 17);
        assert_eq!(s.time_axis()[1], 0.7);
        assert_eq!(*s.freq_axis().last().unwrap(), 5.0);
        assert!(s.values().iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn complex_input_is_two_sided() {
        let x = ComplexSignal::new(vec![Complex64::new(1.0, 0.0); 10], 4.0).unwrap();
        let w = make_window(WindowKind::Rectangular, 4, None, 4.0).unwrap();
        let s = stft(&x, &w, 2, 8).unwrap();
        assert_eq!(s.n_freq(), 8);
        assert_eq!(*s.freq_axis().last().unwrap(), 3.5);
    }

    #[test]
    fn bin_centered_tone_rectangular_window() {
        let fs = 64.0;
        let nfft = 32;
        let k0 = 5;
        let f0 = k0 as f64 * fs / nfft as f64;
        let x: Vec<f64> = (0..256).map(|i| (2.0 * PI * f0 * i as f64 / fs).cos()).collect();
        let x = RealSignal::new(x, fs).unwrap();
        let w = make_window(WindowKind::Rectangular, nfft, None, fs).unwrap();
        let s = spectrogram(&stft(&x, &w, 8, nfft).unwrap());
        // Frames fully inside the signal.
        let interior = (0..s.n_time()).filter(|&m| m * 8 >= 16 && m * 8 + 16 <= 256);
        let mut checked = 0;
        for m in interior {
            let col = s.column(m);
            let peak = col.iter().cloned().fold(f64::MIN, f64::max);
            assert_eq!(col[k0], peak);
            for (k, v) in col.iter().enumerate() {
                if k != k0 {
                    assert!(v.sqrt() < 1e-9, "frame {m} bin {k}: {v}");
                }
            }
            checked += 1;
        }
        assert!(checked > 20);
    }

    #[test]
    fn analytic_tone_peak_is_window_length_squared() {
        let fs = 100.0;
        let nfft = 64;
        let l = 20;
        let f0 = 10.0 * fs / nfft as f64;
        let x: Vec<Complex64> = (0..300)
            .map(|i| Complex64::from_polar(1.0, 2.0 * PI * f0 * i as f64 / fs))
            .collect();
        let x = ComplexSignal::new(x, fs).unwrap();
        let w = make_window(WindowKind::Rectangular, l, None, fs).unwrap();
        let s = spectrogram(&stft(&x, &w, 10, nfft).unwrap());
        let v = s.get(10, 15);
        assert!((v - (l * l) as f64).abs() < 1e-9, "{v}");
    }

    #[test]
    fn errors() {
        let x = RealSignal::new(vec![0.0; 10], 1.0).unwrap();
        let w = make_window(WindowKind::Hann, 8, None, 1.0).unwrap();
        assert!(matches!(stft(&x, &w, 0, 8), Err(TfError::InvalidHop)));
        assert!(matches!(stft(&x, &w, 1, 4), Err(TfError::InvalidNfft { .. })));
        let w2 = make_window(WindowKind::Hann, 8, None, 2.0).unwrap();
        assert!(stft(&x, &w2, 1, 8).is_err());
    }

    #[test]
    fn huge_alpha_tracks_instantaneous_power() {
        let fs = 100.0;
        let x: Vec<f64> = (0..50).map(|i| (i as f64 * 0.3).sin() + 0.2).collect();
        let sig = RealSignal::new(x.clone(), fs).unwrap();
        let g = gabor(&sig, 1e9, 5, 16).unwrap();
        for m in 0..g.n_time() {
            let p = x[m * 5] * x[m * 5];
            for k in 0..g.n_freq() {
                assert!((g.get(k, m) - p).abs() < 1e-9);
            }
        }
    }
}
