//! Heatmap rendering to binary PPM (P6).
//!
//! Pixel rows run from the highest frequency (top) to the lowest. Each pixel
//! takes the value of the nearest grid cell; the frequency coordinate is
//! either linear in Hz or logarithmic.

use std::fs;
use std::path::Path;

use crate::error::{Result, TfError};
use crate::grid::{nearest_index, TfGrid, ValueScale};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Colormap {
    /// Perceptually ordered dark-blue to yellow map.
    Viridis,
    Grayscale,
    /// Blue (negative) through white to red (positive), for signed display.
    Diverging,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalize {
    PerGridMax,
    Absolute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DisplayScale {
    /// Magnitude in dB down to `db_floor`.
    Decibel,
    /// Magnitude on a linear scale.
    Linear,
    /// Signed values centered on zero; pairs with [`Colormap::Diverging`].
    Signed,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderSpec {
    pub colormap: Colormap,
    pub db_floor: f64,
    pub normalize: Normalize,
    pub display: DisplayScale,
    /// `None` follows the grid's own display hint.
    pub log_freq_axis: Option<bool>,
    pub width: usize,
    pub height: usize,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            colormap: Colormap::Viridis,
            db_floor: -120.0,
            normalize: Normalize::PerGridMax,
            display: DisplayScale::Decibel,
            log_freq_axis: None,
            width: 640,
            height: 360,
        }
    }
}

impl RenderSpec {
    fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 {
            return Err(TfError::DegenerateGrid(format!(
                "image dimensions must be at least 1x1, got {}x{}",
                self.width, self.height
            )));
        }
        if !(self.db_floor < 0.0) {
            return Err(TfError::DegenerateGrid(format!(
                "dB floor must be negative, got {}",
                self.db_floor
            )));
        }
        Ok(())
    }
}

const VIRIDIS: [[u8; 3]; 9] = [
    [68, 1, 84],
    [71, 44, 122],
    [59, 81, 139],
    [44, 113, 142],
    [33, 144, 141],
    [39, 173, 129],
    [92, 200, 99],
    [170, 220, 50],
    [253, 231, 37],
];

const DIVERGING: [[u8; 3]; 3] = [[59, 76, 192], [255, 255, 255], [180, 4, 38]];

fn interpolate(table: &[[u8; 3]], u: f64) -> [u8; 3] {
    let u = u.clamp(0.0, 1.0);
    let pos = u * (table.len() - 1) as f64;
    let i = (pos.floor() as usize).min(table.len() - 2);
    let frac = pos - i as f64;
    let mut out = [0u8; 3];
    for (c, o) in out.iter_mut().enumerate() {
        let a = table[i][c] as f64;
        let b = table[i + 1][c] as f64;
        *o = (a + (b - a) * frac).round() as u8;
    }
    out
}

impl Colormap {
    /// Color for a normalized value in [0, 1].
    pub fn lookup(self, u: f64) -> [u8; 3] {
        match self {
            Colormap::Viridis => interpolate(&VIRIDIS, u),
            Colormap::Diverging => interpolate(&DIVERGING, u),
            Colormap::Grayscale => {
                let g = (u.clamp(0.0, 1.0) * 255.0).round() as u8;
                [g, g, g]
            }
        }
    }
}

/// Maps every grid value into [0, 1] according to the display settings.
fn normalized_values(grid: &TfGrid, spec: &RenderSpec) -> Vec<f64> {
    let floor = spec.db_floor;
    let from_db = |d: f64| ((d - floor) / -floor).clamp(0.0, 1.0);

    if grid.scale() == ValueScale::Decibel {
        return grid.values().iter().map(|&d| from_db(d)).collect();
    }
    let max_abs = grid.values().iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let reference = match spec.normalize {
        Normalize::PerGridMax => max_abs,
        Normalize::Absolute => 1.0,
    };
    if reference == 0.0 {
        let zero = if spec.display == DisplayScale::Signed { 0.5 } else { 0.0 };
        return vec![zero; grid.values().len()];
    }
    grid.values()
        .iter()
        .map(|&v| match spec.display {
            DisplayScale::Decibel => {
                let m = v.abs() / reference;
                if m == 0.0 {
                    0.0
                } else {
                    from_db((10.0 * m.log10()).max(floor))
                }
            }
            DisplayScale::Linear => (v.abs() / reference).clamp(0.0, 1.0),
            DisplayScale::Signed => ((v / reference).clamp(-1.0, 1.0) + 1.0) / 2.0,
        })
        .collect()
}

/// Nearest index for each of `pixels` samples along an axis. `reverse` maps
/// pixel 0 to the top of the axis.
fn axis_lookup(axis: &[f64], pixels: usize, log: bool, reverse: bool) -> Vec<usize> {
    let n = axis.len();
    if n == 1 {
        return vec![0; pixels];
    }
    // Use log spacing only when the axis is strictly positive after the
    // first bin; a DC bin is clamped onto the first positive one.
    let first_pos = axis.iter().position(|&f| f > 0.0);
    let coord: Vec<f64> = match (log, first_pos) {
        (true, Some(p)) => axis.iter().map(|&f| f.max(axis[p]).ln()).collect(),
        _ => axis.to_vec(),
    };
    let lo = coord[0];
    let hi = coord[n - 1];
    // Cell-centered mapping: with pixels == n on a uniform axis every pixel
    // lands exactly on one bin.
    let step = (hi - lo) / (n - 1) as f64;
    let span = hi - lo + step;
    (0..pixels)
        .map(|p| {
            let frac = (p as f64 + 0.5) / pixels as f64;
            let target = if reverse {
                hi + step / 2.0 - frac * span
            } else {
                lo - step / 2.0 + frac * span
            };
            nearest_index(&coord, target)
        })
        .collect()
}

/// Encodes the heatmap as PPM bytes.
pub fn render_to_bytes(grid: &TfGrid, spec: &RenderSpec) -> Result<Vec<u8>> {
    spec.validate()?;
    if grid.values().iter().any(|v| !v.is_finite()) {
        return Err(TfError::DegenerateGrid("cannot render non-finite values".into()));
    }
    let u = normalized_values(grid, spec);
    let log = spec.log_freq_axis.unwrap_or(grid.log_freq());
    let rows = axis_lookup(grid.freq_axis(), spec.height, log, true);
    let cols: Vec<usize> = (0..spec.width)
        .map(|p| (((p as f64 + 0.5) * grid.n_time() as f64 / spec.width as f64) as usize).min(grid.n_time() - 1))
        .collect();

    let header = format!("P6\n{} {}\n255\n", spec.width, spec.height);
    let mut out = Vec::with_capacity(header.len() + 3 * spec.width * spec.height);
    out.extend_from_slice(header.as_bytes());
    let n_time = grid.n_time();
    for &fi in &rows {
        for &ti in &cols {
            out.extend_from_slice(&spec.colormap.lookup(u[fi * n_time + ti]));
        }
    }
    Ok(out)
}

/// Writes the heatmap to `path` as PPM.
pub fn render(grid: &TfGrid, spec: &RenderSpec, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let bytes = render_to_bytes(grid, spec)?;
    fs::write(path, bytes).map_err(|e| TfError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::TransformKind;

    fn grid(values: Vec<f64>, n_freq: usize, kind: TransformKind) -> TfGrid {
        let n_time = values.len() / n_freq;
        TfGrid::new(
            values,
            (0..n_freq).map(|i| 10.0 * i as f64).collect(),
            (0..n_time).map(|i| i as f64).collect(),
            kind,
            ValueScale::Linear,
        )
        .unwrap()
    }

    fn pixels(bytes: &[u8]) -> &[u8] {
        // Header "P6\n{w} {h}\n255\n" has three newlines.
        let mut nl = 0;
        let start = bytes
            .iter()
            .position(|&b| {
                if b == b'\n' {
                    nl += 1;
                }
                nl == 3
            })
            .unwrap();
        &bytes[start + 1..]
    }

    #[test]
    fn two_by_two_corners() {
        // [freq][time]: low bin = [1, 2], high bin = [3, 4].
        let g = grid(vec![1.0, 2.0, 3.0, 4.0], 2, TransformKind::Spectrogram);
        let spec = RenderSpec {
            width: 2,
            height: 2,
            display: DisplayScale::Linear,
            ..Default::default()
        };
        let bytes = render_to_bytes(&g, &spec).unwrap();
        assert!(bytes.starts_with(b"P6\n2 2\n255\n"));
        let px = pixels(&bytes);
        assert_eq!(px.len(), 12);
        let cmap = Colormap::Viridis;
        // Top row is the high-frequency bin.
        assert_eq!(&px[0..3], &cmap.lookup(0.75));
        assert_eq!(&px[3..6], &cmap.lookup(1.0));
        assert_eq!(&px[6..9], &cmap.lookup(0.25));
        assert_eq!(&px[9..12], &cmap.lookup(0.5));
    }

    #[test]
    fn grayscale_checkerboard() {
        let g = grid(vec![0.0, 7.0, 7.0, 0.0, 0.0, 7.0, 7.0, 0.0, 0.0], 3, TransformKind::Spectrogram);
        for display in [DisplayScale::Decibel, DisplayScale::Linear] {
            let spec = RenderSpec {
                width: 3,
                height: 3,
                colormap: Colormap::Grayscale,
                display,
                ..Default::default()
            };
            let bytes = render_to_bytes(&g, &spec).unwrap();
            let px = pixels(&bytes);
            for (i, rgb) in px.chunks(3).enumerate() {
                let (row, col) = (i / 3, i % 3);
                let fi = 2 - row;
                let expected = if g.get(fi, col) > 0.0 { 255 } else { 0 };
                assert_eq!(rgb, &[expected; 3], "pixel {row},{col}");
            }
        }
    }

    #[test]
    fn deterministic_and_resampled() {
        let values: Vec<f64> = (0..40).map(|i| (i as f64 * 0.37).sin()).collect();
        let g = grid(values, 5, TransformKind::Wvd);
        let spec = RenderSpec {
            width: 17,
            height: 9,
            colormap: Colormap::Diverging,
            display: DisplayScale::Signed,
            ..Default::default()
        };
        let a = render_to_bytes(&g, &spec).unwrap();
        let b = render_to_bytes(&g, &spec).unwrap();
        assert_eq!(a, b);
        assert_eq!(pixels(&a).len(), 17 * 9 * 3);
    }

    #[test]
    fn log_axis_lookup_favours_low_bins() {
        let axis: Vec<f64> = (0..100).map(|i| i as f64).collect();
        let lin = axis_lookup(&axis, 10, false, true);
        let log = axis_lookup(&axis, 10, true, true);
        assert!(lin[0] >= 90 && log[0] > 50, "{lin:?} {log:?}");
        assert!(log.windows(2).all(|w| w[0] >= w[1]));
        // Middle pixel on a log axis sits near the geometric mean.
        assert!(log[5] < 15, "{log:?}");
        assert!(lin[5] > 40, "{lin:?}");
    }

    #[test]
    fn rejects_bad_specs() {
        let g = grid(vec![1.0], 1, TransformKind::Spectrogram);
        let spec = RenderSpec {
            width: 0,
            ..Default::default()
        };
        assert!(render_to_bytes(&g, &spec).is_err());
        let dir = tempfile::tempdir().unwrap();
        let e = render(&g, &RenderSpec::default(), dir.path().join("missing/x.ppm"));
        assert!(matches!(e, Err(TfError::Io { .. })));
    }
}
