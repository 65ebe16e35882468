//! Small measurements on sampled curves: peaks, widths and the dominant
//! frequency of a sequence.

use std::f64::consts::PI;

use crate::engine::dft_forward_real;

/// Index of the largest finite value.
pub fn peak_index(values: &[f64]) -> Option<usize> {
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_finite())
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
}

/// Width between the points where `values` falls to half of `values[peak]`,
/// on either side of `peak`, with linear interpolation between samples.
/// A side that never falls below half extends to the end of the axis.
pub fn half_power_width(values: &[f64], axis: &[f64], peak: usize) -> f64 {
    assert_eq!(values.len(), axis.len());
    let half = values[peak] / 2.0;
    let cross = |i: usize, j: usize| {
        // values[i] >= half > values[j]
        let frac = (values[i] - half) / (values[i] - values[j]);
        axis[i] + frac * (axis[j] - axis[i])
    };
    let left = (0..peak)
        .rev()
        .find(|&j| values[j] < half)
        .map_or(axis[0], |j| cross(j + 1, j));
    let right = (peak + 1..values.len())
        .find(|&j| values[j] < half)
        .map_or(axis[axis.len() - 1], |j| cross(j - 1, j));
    right - left
}

/// Standard deviation of `axis` weighted by nonnegative `weights`.
pub fn rms_width(weights: &[f64], axis: &[f64]) -> f64 {
    let total: f64 = weights.iter().sum();
    let mean = weights.iter().zip(axis).map(|(w, a)| w * a).sum::<f64>() / total;
    let var = weights
        .iter()
        .zip(axis)
        .map(|(w, a)| w * (a - mean).powi(2))
        .sum::<f64>()
        / total;
    var.max(0.0).sqrt()
}

/// Frequency of the strongest oscillation in `x` sampled at `sample_rate`.
///
/// The mean is removed, a Hann taper applied and the sequence zero-padded
/// before the DFT; the peak bin is refined by a parabola through the
/// log-magnitudes of its neighbours. Returns `None` for constant input.
pub fn dominant_frequency(x: &[f64], sample_rate: f64) -> Option<f64> {
    let n = x.len();
    if n < 3 {
        return None;
    }
    let mean = x.iter().sum::<f64>() / n as f64;
    let tapered: Vec<f64> = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v - mean) * (0.5 - 0.5 * (2.0 * PI * i as f64 / (n - 1) as f64).cos()))
        .collect();
    let len = (8 * n).max(4096).next_power_of_two();
    let spec = dft_forward_real(&tapered, len).ok()?;
    let mags: Vec<f64> = spec[..=len / 2].iter().map(|z| z.norm()).collect();
    let k = peak_index(&mags[1..])? + 1;
    if mags[k] <= 0.0 {
        return None;
    }
    let mut offset = 0.0;
    if k + 1 < mags.len() && mags[k - 1] > 0.0 && mags[k + 1] > 0.0 {
        let (a, b, c) = (mags[k - 1].ln(), mags[k].ln(), mags[k + 1].ln());
        let denom = a - 2.0 * b + c;
        if denom != 0.0 {
            offset = 0.5 * (a - c) / denom;
        }
    }
    Some((k as f64 + offset) * sample_rate / len as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_power_of_triangle() {
        let axis: Vec<f64> = (0..9).map(|i| i as f64).collect();
        let v = [0.0, 0.0, 1.0, 2.0, 4.0, 2.0, 1.0, 0.0, 0.0];
        let p = peak_index(&v).unwrap();
        assert_eq!(p, 4);
        // Half power (2.0) reached exactly at 3 and 5; the search looks for
        // strictly lower samples and interpolates back onto them.
        assert!((half_power_width(&v, &axis, p) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn half_power_open_sides() {
        let axis = [0.0, 1.0, 2.0];
        assert_eq!(half_power_width(&[1.0, 1.0, 1.0], &axis, 1), 2.0);
    }

    #[test]
    fn rms_of_two_points() {
        assert!((rms_width(&[1.0, 1.0], &[-1.0, 1.0]) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dominant_frequency_of_sine() {
        let fs = 1000.0;
        let x: Vec<f64> = (0..500).map(|i| (2.0 * PI * 123.4 * i as f64 / fs).sin() + 3.0).collect();
        let f = dominant_frequency(&x, fs).unwrap();
        assert!((f - 123.4).abs() < 0.2, "{f}");
        assert_eq!(dominant_frequency(&[1.0; 10], fs), None);
    }
}
