//! Time-frequency grids and everything that consumes them.

mod db;
mod format;
mod render;

use num_complex::Complex64;

use crate::error::{Result, TfError};

pub use db::{to_db, Decibels};
pub use format::{read_grid, write_grid, GridFormat};
pub use render::{render, render_to_bytes, Colormap, DisplayScale, Normalize, RenderSpec};

/// Which transform produced a grid. Stored as a one-byte tag in tfgrid files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformKind {
    /// |STFT|^2, including the Gabor transform.
    Spectrogram = 0,
    /// |CWT|^2 with scales mapped to frequency.
    Scalogram = 1,
    /// |ST|^2.
    Stockwell = 2,
    Wvd = 3,
    Spwvd = 4,
}

impl TransformKind {
    pub fn tag(self) -> u8 {
        self as u8
    }

    pub fn from_tag(tag: u8) -> Option<Self> {
        Some(match tag {
            0 => Self::Spectrogram,
            1 => Self::Scalogram,
            2 => Self::Stockwell,
            3 => Self::Wvd,
            4 => Self::Spwvd,
            _ => return None,
        })
    }

    /// WVD-family grids may hold negative values.
    pub fn is_signed(self) -> bool {
        matches!(self, Self::Wvd | Self::Spwvd)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Spectrogram => "spectrogram",
            Self::Scalogram => "scalogram",
            Self::Stockwell => "stockwell",
            Self::Wvd => "wvd",
            Self::Spwvd => "spwvd",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueScale {
    Linear,
    Decibel,
}

/// Real-valued time-frequency array with explicit axes.
///
/// Values are stored row-major as `[frequency bin][time frame]`. Both axes
/// are strictly increasing. `log_freq` is a display hint (set for
/// scalograms) and does not change the data.
#[derive(Debug, Clone, PartialEq)]
pub struct TfGrid {
    values: Vec<f64>,
    freq_axis: Vec<f64>,
    time_axis: Vec<f64>,
    kind: TransformKind,
    scale: ValueScale,
    log_freq: bool,
}

fn strictly_increasing(axis: &[f64]) -> bool {
    axis.iter().all(|v| v.is_finite()) && axis.windows(2).all(|w| w[1] > w[0])
}

impl TfGrid {
    pub fn new(
        values: Vec<f64>,
        freq_axis: Vec<f64>,
        time_axis: Vec<f64>,
        kind: TransformKind,
        scale: ValueScale,
    ) -> Result<Self> {
        if freq_axis.is_empty() || time_axis.is_empty() {
            return Err(TfError::DegenerateGrid("grid axes must be nonempty".into()));
        }
        if values.len() != freq_axis.len() * time_axis.len() {
            return Err(TfError::DegenerateGrid(format!(
                "{} values do not fill a {}x{} grid",
                values.len(),
                freq_axis.len(),
                time_axis.len()
            )));
        }
        if !strictly_increasing(&freq_axis) || !strictly_increasing(&time_axis) {
            return Err(TfError::DegenerateGrid("axes must be strictly increasing".into()));
        }
        if scale == ValueScale::Linear && !kind.is_signed() && values.iter().any(|&v| v < 0.0) {
            return Err(TfError::DegenerateGrid(format!(
                "{} grid holds negative values",
                kind.name()
            )));
        }
        Ok(Self {
            values,
            freq_axis,
            time_axis,
            kind,
            scale,
            log_freq: false,
        })
    }

    pub fn with_log_freq(mut self, log_freq: bool) -> Self {
        self.log_freq = log_freq;
        self
    }

    pub fn n_freq(&self) -> usize {
        self.freq_axis.len()
    }

    pub fn n_time(&self) -> usize {
        self.time_axis.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn freq_axis(&self) -> &[f64] {
        &self.freq_axis
    }

    pub fn time_axis(&self) -> &[f64] {
        &self.time_axis
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    pub fn scale(&self) -> ValueScale {
        self.scale
    }

    pub fn log_freq(&self) -> bool {
        self.log_freq
    }

    pub fn get(&self, freq_bin: usize, frame: usize) -> f64 {
        self.values[freq_bin * self.n_time() + frame]
    }

    /// Values of one frequency bin across time.
    pub fn row(&self, freq_bin: usize) -> &[f64] {
        let n = self.n_time();
        &self.values[freq_bin * n..(freq_bin + 1) * n]
    }

    /// Values of one time frame across frequency.
    pub fn column(&self, frame: usize) -> Vec<f64> {
        (0..self.n_freq()).map(|f| self.get(f, frame)).collect()
    }

    /// Index of the frequency bin closest to `freq`.
    pub fn nearest_freq_bin(&self, freq: f64) -> usize {
        nearest_index(&self.freq_axis, freq)
    }

    pub fn nearest_frame(&self, time: f64) -> usize {
        nearest_index(&self.time_axis, time)
    }

    pub(crate) fn map_values(&self, kind: TransformKind, scale: ValueScale, f: impl Fn(f64) -> f64) -> Self {
        Self {
            values: self.values.iter().map(|&v| f(v)).collect(),
            freq_axis: self.freq_axis.clone(),
            time_axis: self.time_axis.clone(),
            kind,
            scale,
            log_freq: self.log_freq,
        }
    }

    pub(crate) fn with_values(&self, values: Vec<f64>, kind: TransformKind) -> Self {
        debug_assert_eq!(values.len(), self.values.len());
        Self {
            values,
            freq_axis: self.freq_axis.clone(),
            time_axis: self.time_axis.clone(),
            kind,
            scale: self.scale,
            log_freq: self.log_freq,
        }
    }
}

pub(crate) fn nearest_index(axis: &[f64], x: f64) -> usize {
    let i = axis.partition_point(|&a| a < x);
    if i == 0 {
        0
    } else if i == axis.len() {
        axis.len() - 1
    } else if (x - axis[i - 1]) <= (axis[i] - x) {
        i - 1
    } else {
        i
    }
}

/// Complex-valued time-frequency array, row-major `[row][time frame]`.
///
/// Rows are frequency bins (STFT, Stockwell) or scales (CWT); the row axis
/// is always published in Hz and increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexTfGrid {
    pub(crate) values: Vec<Complex64>,
    pub(crate) freq_axis: Vec<f64>,
    pub(crate) time_axis: Vec<f64>,
}

impl ComplexTfGrid {
    pub fn n_freq(&self) -> usize {
        self.freq_axis.len()
    }

    pub fn n_time(&self) -> usize {
        self.time_axis.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn freq_axis(&self) -> &[f64] {
        &self.freq_axis
    }

    pub fn time_axis(&self) -> &[f64] {
        &self.time_axis
    }

    pub fn get(&self, row: usize, frame: usize) -> Complex64 {
        self.values[row * self.n_time() + frame]
    }

    pub fn row(&self, row: usize) -> &[Complex64] {
        let n = self.n_time();
        &self.values[row * n..(row + 1) * n]
    }

    /// Squared magnitudes as a [`TfGrid`].
    pub fn power(&self, kind: TransformKind) -> TfGrid {
        TfGrid {
            values: self.values.iter().map(|z| z.norm_sqr()).collect(),
            freq_axis: self.freq_axis.clone(),
            time_axis: self.time_axis.clone(),
            kind,
            scale: ValueScale::Linear,
            log_freq: false,
        }
    }
}
