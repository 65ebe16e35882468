use crate::error::{Result, TfError};
use crate::grid::{TfGrid, TransformKind};
use crate::quadratic::wvd::{wvd_with, WvdOptions, WvdOutput};
use crate::signal::RealSignal;

/// Separable smoothing kernels: `time` runs along frames, `freq` along bins.
/// Both are odd-length, symmetric, nonnegative and sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct SmoothingKernel {
    time: Vec<f64>,
    freq: Vec<f64>,
}

/// Bins covered by the default frequency kernel.
pub const DEFAULT_FREQ_LEN: usize = 7;

fn check(name: &str, k: &[f64]) -> Result<()> {
    if k.is_empty() || k.len().is_multiple_of(2) {
        return Err(TfError::InvalidKernel(format!(
            "{name} kernel length must be odd, got {}",
            k.len()
        )));
    }
    if k.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
        return Err(TfError::InvalidKernel(format!("{name} kernel has a negative or non-finite tap")));
    }
    let sum: f64 = k.iter().sum();
    if (sum - 1.0).abs() > 1e-12 {
        return Err(TfError::InvalidKernel(format!("{name} kernel sums to {sum}, not 1")));
    }
    let n = k.len();
    if (0..n / 2).any(|i| (k[i] - k[n - 1 - i]).abs() > 1e-12) {
        return Err(TfError::InvalidKernel(format!("{name} kernel is not symmetric")));
    }
    Ok(())
}

fn gaussian_taps(len: usize) -> Vec<f64> {
    let sigma = len as f64 / 6.0;
    let c = (len / 2) as f64;
    let raw: Vec<f64> = (0..len)
        .map(|i| (-0.5 * ((i as f64 - c) / sigma).powi(2)).exp())
        .collect();
    let sum: f64 = raw.iter().sum();
    raw.into_iter().map(|v| v / sum).collect()
}

impl SmoothingKernel {
    pub fn new(time: Vec<f64>, freq: Vec<f64>) -> Result<Self> {
        check("time", &time)?;
        check("frequency", &freq)?;
        Ok(Self { time, freq })
    }

    /// Unit impulses in both directions; smoothing becomes the identity.
    pub fn identity() -> Self {
        Self {
            time: vec![1.0],
            freq: vec![1.0],
        }
    }

    /// Gaussian taps with `sigma = length / 6`, normalized to unit sum.
    pub fn gaussian(time_len: usize, freq_len: usize) -> Result<Self> {
        for (name, len) in [("time", time_len), ("frequency", freq_len)] {
            if len == 0 || len % 2 == 0 {
                return Err(TfError::InvalidKernel(format!("{name} kernel length must be odd, got {len}")));
            }
        }
        Self::new(gaussian_taps(time_len), gaussian_taps(freq_len))
    }

    /// Gaussian kernels for a grid with `n_time` frames: about a tenth of
    /// the frames along time and [`DEFAULT_FREQ_LEN`] bins along frequency.
    pub fn default_for(n_time: usize, n_freq: usize) -> Result<Self> {
        let odd_cap = |n: usize| if n % 2 == 1 { n } else { n.saturating_sub(1).max(1) };
        let time_len = ((n_time / 10) | 1).min(odd_cap(n_time));
        let freq_len = DEFAULT_FREQ_LEN.min(odd_cap(n_freq));
        Self::gaussian(time_len, freq_len)
    }

    pub fn time(&self) -> &[f64] {
        &self.time
    }

    pub fn freq(&self) -> &[f64] {
        &self.freq
    }
}

/// Half-sample symmetric reflection of an index into `0..n`.
fn reflect(i: isize, n: usize) -> usize {
    let n = n as isize;
    if i < 0 {
        (-i - 1) as usize
    } else if i >= n {
        (2 * n - 1 - i) as usize
    } else {
        i as usize
    }
}

/// Convolve `data` (strided sequence of `len` samples) with `kernel`.
fn convolve(data: &[f64], kernel: &[f64]) -> Vec<f64> {
    let len = data.len();
    let c = (kernel.len() / 2) as isize;
    (0..len as isize)
        .map(|i| {
            let mut acc = kernel[0] * data[reflect(i + c, len)];
            for (j, &w) in kernel.iter().enumerate().skip(1) {
                acc += w * data[reflect(i + c - j as isize, len)];
            }
            acc
        })
        .collect()
}

/// Separable smoothing of a grid: `time` kernel along each row, then the
/// `freq` kernel along each column. Boundaries are mirrored.
pub fn smooth(grid: &TfGrid, kernel: &SmoothingKernel) -> Result<TfGrid> {
    let (nf, nt) = (grid.n_freq(), grid.n_time());
    if kernel.time.len() > nt {
        return Err(TfError::InvalidKernel(format!(
            "time kernel length {} exceeds {nt} frames",
            kernel.time.len()
        )));
    }
    if kernel.freq.len() > nf {
        return Err(TfError::InvalidKernel(format!(
            "frequency kernel length {} exceeds {nf} bins",
            kernel.freq.len()
        )));
    }
    let mut rows: Vec<f64> = Vec::with_capacity(nf * nt);
    for k in 0..nf {
        rows.extend(convolve(grid.row(k), &kernel.time));
    }
    let mut out = vec![0.0; nf * nt];
    let mut col = vec![0.0; nf];
    for t in 0..nt {
        for k in 0..nf {
            col[k] = rows[k * nt + t];
        }
        for (k, v) in convolve(&col, &kernel.freq).into_iter().enumerate() {
            out[k * nt + t] = v;
        }
    }
    let kind = if grid.kind() == TransformKind::Wvd {
        TransformKind::Spwvd
    } else {
        grid.kind()
    };
    Ok(grid.with_values(out, kind))
}

/// Smoothed pseudo Wigner-Ville distribution with default WVD options.
pub fn spwvd(x: &RealSignal, kernel: &SmoothingKernel) -> Result<TfGrid> {
    Ok(spwvd_with(x, kernel, &WvdOptions::default())?.grid)
}

pub fn spwvd_with(x: &RealSignal, kernel: &SmoothingKernel, opts: &WvdOptions) -> Result<WvdOutput> {
    let out = wvd_with(x, opts)?;
    Ok(WvdOutput {
        grid: smooth(&out.grid, kernel)?,
        ..out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::ValueScale;
    use crate::quadratic::wvd::wvd;

    #[test]
    fn kernel_validation() {
        assert!(SmoothingKernel::new(vec![0.5, 0.5], vec![1.0]).is_err());
        assert!(SmoothingKernel::new(vec![0.2, 0.5, 0.2], vec![1.0]).is_err());
        assert!(SmoothingKernel::new(vec![0.2, 0.5, 0.3], vec![1.0]).is_err());
        assert!(SmoothingKernel::new(vec![0.25, 0.5, 0.25], vec![1.0]).is_ok());
        let g = SmoothingKernel::gaussian(21, 7).unwrap();
        assert!((g.time().iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert_eq!(g.freq().len(), 7);
    }

    #[test]
    fn default_sizes() {
        let k = SmoothingKernel::default_for(1000, 512).unwrap();
        assert_eq!(k.time().len(), 101);
        assert_eq!(k.freq().len(), 7);
        let k = SmoothingKernel::default_for(4, 4).unwrap();
        assert!(k.time().len() <= 4 && k.freq().len() <= 4);
    }

    #[test]
    fn identity_is_exact() {
        let x: Vec<f64> = (0..40).map(|i| ((i * 5) % 9) as f64 - 4.0).collect();
        let x = RealSignal::new(x, 8.0).unwrap();
        let w = wvd(&x).unwrap();
        let s = spwvd(&x, &SmoothingKernel::identity()).unwrap();
        assert_eq!(w.values(), s.values());
        assert_eq!(s.kind(), TransformKind::Spwvd);
    }

    #[test]
    fn mirror_boundary_preserves_constant() {
        let g = TfGrid::new(
            vec![3.0; 20],
            vec![0.0, 1.0, 2.0, 3.0],
            vec![0.0, 1.0, 2.0, 3.0, 4.0],
            TransformKind::Wvd,
            ValueScale::Linear,
        )
        .unwrap();
        let k = SmoothingKernel::gaussian(5, 3).unwrap();
        let s = smooth(&g, &k).unwrap();
        assert!(s.values().iter().all(|v| (v - 3.0).abs() < 1e-12));
        let too_big = SmoothingKernel::gaussian(7, 3).unwrap();
        assert!(matches!(smooth(&g, &too_big), Err(TfError::InvalidKernel(_))));
    }
}
