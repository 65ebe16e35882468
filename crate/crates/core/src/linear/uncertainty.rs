//! RMS duration, RMS bandwidth and their product.
//!
//! `T` is the standard deviation of time weighted by `|w(t)|^2 / energy`,
//! `B` the standard deviation of frequency weighted by `|W(f)|^2 / energy`
//! over the two-sided spectrum. Under these second-moment definitions
//! `T * B >= 1 / (4 pi)` with equality for the Gaussian.

use crate::engine::{bin_frequency_two_sided, dft_forward_real};
use crate::error::{Result, TfError};
use crate::linear::window::Window;

pub const UNCERTAINTY_BOUND: f64 = 1.0 / (4.0 * std::f64::consts::PI);

/// Minimum zero-padded spectrum length used for the bandwidth moment.
const MIN_SPECTRUM_LEN: usize = 8192;

fn weighted_std(points: impl Iterator<Item = (f64, f64)> + Clone) -> f64 {
    let total: f64 = points.clone().map(|(_, w)| w).sum();
    let mean: f64 = points.clone().map(|(x, w)| x * w).sum::<f64>() / total;
    let var: f64 = points.map(|(x, w)| (x - mean).powi(2) * w).sum::<f64>() / total;
    var.max(0.0).sqrt()
}

fn check_energy(w: &Window) -> Result<()> {
    let e = w.energy();
    if !(e > 0.0 && e.is_finite()) {
        return Err(TfError::DegenerateWindow(format!("window energy is {e}")));
    }
    Ok(())
}

/// RMS duration in seconds.
pub fn rms_duration(w: &Window) -> Result<f64> {
    check_energy(w)?;
    let fs = w.sample_rate();
    let center = w.center() as f64;
    Ok(weighted_std(
        w.coefficients()
            .iter()
            .enumerate()
            .map(|(n, c)| ((n as f64 - center) / fs, c * c)),
    ))
}

/// RMS bandwidth in Hz from a zero-padded two-sided spectrum.
pub fn rms_bandwidth(w: &Window) -> Result<f64> {
    check_energy(w)?;
    let fs = w.sample_rate();
    let npad = (16 * w.len()).max(MIN_SPECTRUM_LEN).next_power_of_two();
    let spec = dft_forward_real(w.coefficients(), npad)?;
    Ok(weighted_std(
        spec.iter()
            .enumerate()
            .map(|(k, z)| (bin_frequency_two_sided(k, npad, fs), z.norm_sqr())),
    ))
}

/// Dimensionless product of RMS duration and RMS bandwidth.
pub fn time_bandwidth_product(w: &Window) -> Result<f64> {
    Ok(rms_duration(w)? * rms_bandwidth(w)?)
}
