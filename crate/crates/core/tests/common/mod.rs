//! Reference implementations used as test oracles. Deliberately naive.

#![allow(dead_code)]

use std::f64::consts::PI;

use tfkit::Complex64;

/// Direct O(N^2) DFT with exact index reduction for the twiddle angle.
pub fn direct_dft(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    (0..n)
        .map(|k| {
            x.iter()
                .enumerate()
                .map(|(j, v)| {
                    let r = (k * j) % n;
                    v * Complex64::from_polar(1.0, -2.0 * PI * r as f64 / n as f64)
                })
                .sum()
        })
        .collect()
}

pub fn direct_dft_real(x: &[f64]) -> Vec<Complex64> {
    direct_dft(&x.iter().map(|&v| Complex64::new(v, 0.0)).collect::<Vec<_>>())
}

/// `sum_k x[k + lag] conj(x[k])` over all valid `k`, for any signed lag.
pub fn direct_acf(x: &[Complex64], lag: isize) -> Complex64 {
    let n = x.len() as isize;
    (0..n)
        .filter(|&k| k + lag >= 0 && k + lag < n)
        .map(|k| x[(k + lag) as usize] * x[k as usize].conj())
        .sum()
}

pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(u, v)| (u - v).norm()).fold(0.0, f64::max)
}
