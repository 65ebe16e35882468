use num_complex::Complex64;

use crate::error::{Result, TfError};
use crate::signal::ComplexSignal;

/// Lag products `R[n, m] = x[n + m] conj(x[n - m])` for `|m| <= max_lag`.
///
/// Lag index `m` corresponds to a separation of `2m` samples, so the lag
/// axis is `2m / fs` seconds. Products reaching outside the signal are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct LagGrid {
    values: Vec<Complex64>,
    max_lag: usize,
    lag_axis: Vec<f64>,
    time_axis: Vec<f64>,
}

impl LagGrid {
    pub fn n_time(&self) -> usize {
        self.time_axis.len()
    }

    pub fn max_lag(&self) -> usize {
        self.max_lag
    }

    pub fn n_lags(&self) -> usize {
        2 * self.max_lag + 1
    }

    /// `R[n, m]` for `-max_lag <= m <= max_lag`.
    pub fn get(&self, n: usize, m: isize) -> Complex64 {
        assert!(m.unsigned_abs() <= self.max_lag, "lag {m} out of range");
        self.values[n * self.n_lags() + (m + self.max_lag as isize) as usize]
    }

    /// Row `n`, ordered from lag `-max_lag` to `+max_lag`.
    pub fn at_time(&self, n: usize) -> &[Complex64] {
        let w = self.n_lags();
        &self.values[n * w..(n + 1) * w]
    }

    pub fn lag_axis(&self) -> &[f64] {
        &self.lag_axis
    }

    pub fn time_axis(&self) -> &[f64] {
        &self.time_axis
    }
}

pub fn instantaneous_autocorrelation(x: &ComplexSignal, max_lag: usize) -> Result<LagGrid> {
    let n = x.len();
    if max_lag > n / 2 {
        return Err(TfError::InvalidLag(format!(
            "max lag {max_lag} exceeds half the signal length ({n} samples)"
        )));
    }
    let s = x.samples();
    let fs = x.sample_rate();
    let mut values = Vec::with_capacity(n * (2 * max_lag + 1));
    for t in 0..n as isize {
        for m in -(max_lag as isize)..=max_lag as isize {
            let (a, b) = (t + m, t - m);
            values.push(if a >= 0 && b >= 0 && (a as usize) < n && (b as usize) < n {
                s[a as usize] * s[b as usize].conj()
            } else {
                Complex64::new(0.0, 0.0)
            });
        }
    }
    Ok(LagGrid {
        values,
        max_lag,
        lag_axis: (-(max_lag as isize)..=max_lag as isize)
            .map(|m| 2.0 * m as f64 / fs)
            .collect(),
        time_axis: (0..n).map(|t| t as f64 / fs).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> ComplexSignal {
        let v = (0..21)
            .map(|i| Complex64::new((i as f64 * 0.7).sin(), (i as f64 * 1.3).cos() - 0.2))
            .collect();
        ComplexSignal::new(v, 10.0).unwrap()
    }

    #[test]
    fn zero_lag_is_power() {
        let x = sig();
        let r = instantaneous_autocorrelation(&x, 5).unwrap();
        for (n, z) in x.samples().iter().enumerate() {
            assert_eq!(r.get(n, 0), Complex64::new(z.norm_sqr(), 0.0));
        }
    }

    #[test]
    fn hermitian_in_lag() {
        let r = instantaneous_autocorrelation(&sig(), 10).unwrap();
        for n in 0..r.n_time() {
            for m in 1..=10isize {
                assert!((r.get(n, -m) - r.get(n, m).conj()).norm() < 1e-12);
            }
        }
        assert_eq!(r.lag_axis()[0], -2.0);
    }

    #[test]
    fn out_of_range_lag() {
        assert!(matches!(
            instantaneous_autocorrelation(&sig(), 11),
            Err(TfError::InvalidLag(_))
        ));
    }
}
