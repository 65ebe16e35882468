use serde::Serialize;

use crate::error::{Result, TfError};
use crate::grid::{TfGrid, ValueScale};
use crate::measure::{dominant_frequency, peak_index};

/// Cross-term measurements on a grid of a two-component signal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossTermReport {
    pub f1: f64,
    pub f2: f64,
    /// Largest value on the ridge near `f1` / `f2`.
    pub auto_peak_1: f64,
    pub auto_peak_2: f64,
    /// Bin near `(f1 + f2) / 2` carrying the most energy over time.
    pub midpoint_freq: f64,
    /// Sum over time of the squared values on that bin.
    pub midpoint_energy: f64,
    /// Largest magnitude on that bin.
    pub cross_peak: f64,
    /// Whether `cross_peak` reaches [`CROSS_PRESENT_FRACTION`] of the mean auto peak.
    pub cross_present: bool,
    /// Dominant oscillation frequency of the midpoint bin along time, 1/s.
    pub oscillation_rate: Option<f64>,
}

impl CrossTermReport {
    pub fn mean_auto_peak(&self) -> f64 {
        0.5 * (self.auto_peak_1 + self.auto_peak_2)
    }

    pub fn cross_to_auto_ratio(&self) -> f64 {
        self.cross_peak / self.mean_auto_peak()
    }
}

pub const CROSS_PRESENT_FRACTION: f64 = 0.1;

fn bins_within(grid: &TfGrid, center: f64, half_width: f64) -> Vec<usize> {
    let axis = grid.freq_axis();
    let mut bins: Vec<usize> = (0..axis.len())
        .filter(|&k| (axis[k] - center).abs() <= half_width)
        .collect();
    if bins.is_empty() {
        bins.push(grid.nearest_freq_bin(center));
    }
    bins
}

/// Locates the auto terms near `f1` and `f2` and the cross term between them.
///
/// Auto peaks are searched within `(f2 - f1) / 8` of each tone; the midpoint
/// bin is the one with the most energy within `(f2 - f1) / 4` of the
/// midpoint.
pub fn cross_term_report(grid: &TfGrid, f1: f64, f2: f64) -> Result<CrossTermReport> {
    if !(f1 < f2) {
        return Err(TfError::InvalidBand {
            lo: f1,
            hi: f2,
            reason: "need f1 < f2".into(),
        });
    }
    if grid.scale() != ValueScale::Linear {
        return Err(TfError::InvalidGrid("cross-term report needs a linear-scale grid".into()));
    }
    let sep = f2 - f1;
    let top = *grid.freq_axis().last().expect("grid has bins");
    if f2 > top + sep / 8.0 {
        return Err(TfError::OutOfBand { freq: f2, nyquist: top });
    }

    let auto_peak = |f: f64| {
        bins_within(grid, f, sep / 8.0)
            .into_iter()
            .flat_map(|k| grid.row(k).iter().cloned())
            .fold(f64::MIN, f64::max)
    };
    let auto_peak_1 = auto_peak(f1);
    let auto_peak_2 = auto_peak(f2);

    let mid = 0.5 * (f1 + f2);
    let energies: Vec<(usize, f64)> = bins_within(grid, mid, sep / 4.0)
        .into_iter()
        .map(|k| (k, grid.row(k).iter().map(|v| v * v).sum()))
        .collect();
    let (mid_bin, midpoint_energy) = energies
        .into_iter()
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("at least one bin");
    let row = grid.row(mid_bin);
    let cross_peak = row.iter().map(|v| v.abs()).fold(0.0, f64::max);
    let cross_present = cross_peak >= CROSS_PRESENT_FRACTION * 0.5 * (auto_peak_1 + auto_peak_2);

    let oscillation_rate = match grid.time_axis() {
        [t0, t1, ..] if cross_present && peak_index(row).is_some() => dominant_frequency(row, 1.0 / (t1 - t0)),
        _ => None,
    };

    Ok(CrossTermReport {
        f1,
        f2,
        auto_peak_1,
        auto_peak_2,
        midpoint_freq: grid.freq_axis()[mid_bin],
        midpoint_energy,
        cross_peak,
        cross_present,
        oscillation_rate,
    })
}
