mod common;

use std::f64::consts::PI;

use proptest::collection::vec;
use proptest::prelude::*;

use tfkit::engine::{analytic_signal, dft_forward, dft_inverse};
use tfkit::grid::{read_grid, write_grid, GridFormat};
use tfkit::linear::{make_window, stft, time_bandwidth_product, Window, WindowKind, UNCERTAINTY_BOUND};
use tfkit::multiscale::{cwt, stockwell, MorletParams, ScaleGrid};
use tfkit::quadratic::{
    cross_term_report, instantaneous_autocorrelation, spwvd, wvd, wvd_with, SmoothingKernel, WvdOptions,
};
use tfkit::{Complex64, ComplexSignal, RealSignal, TfGrid, TransformKind, ValueScale};

use common::{direct_dft, max_abs_diff};

fn real_signal(min: usize, max: usize) -> impl Strategy<Value = Vec<f64>> {
    vec(-1.0f64..1.0, min..max)
}

fn complex_signal(min: usize, max: usize) -> impl Strategy<Value = Vec<Complex64>> {
    vec((-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| Complex64::new(a, b)), min..max)
}

fn pair(min: usize, max: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (min..max).prop_flat_map(|n| (vec(-1.0f64..1.0, n), vec(-1.0f64..1.0, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dft_matches_direct_sum(x in complex_signal(1, 200)) {
        let fast = dft_forward(&x, x.len()).unwrap();
        prop_assert!(max_abs_diff(&fast, &direct_dft(&x)) < 1e-9);
    }

    #[test]
    fn dft_parseval_and_roundtrip(x in complex_signal(1, 300)) {
        let n = x.len();
        let spec = dft_forward(&x, n).unwrap();
        let et: f64 = x.iter().map(|z| z.norm_sqr()).sum();
        let ef: f64 = spec.iter().map(|z| z.norm_sqr()).sum::<f64>() / n as f64;
        prop_assert!((et - ef).abs() < 1e-9 * (1.0 + et));
        prop_assert!(max_abs_diff(&dft_inverse(&spec).unwrap(), &x) < 1e-12);
    }

    #[test]
    fn dft_linearity((x, y) in pair(1, 200), a in -3.0f64..3.0, b in -3.0f64..3.0) {
        let c = |v: &[f64]| v.iter().map(|&r| Complex64::new(r, 0.0)).collect::<Vec<_>>();
        let n = x.len();
        let comb: Vec<Complex64> = x.iter().zip(&y).map(|(p, q)| Complex64::new(a * p + b * q, 0.0)).collect();
        let lhs = dft_forward(&comb, n).unwrap();
        let fx = dft_forward(&c(&x), n).unwrap();
        let fy = dft_forward(&c(&y), n).unwrap();
        let rhs: Vec<Complex64> = fx.iter().zip(&fy).map(|(u, v)| u * a + v * b).collect();
        prop_assert!(max_abs_diff(&lhs, &rhs) < 1e-9);
    }

    #[test]
    fn analytic_real_part_is_input(x in real_signal(2, 300)) {
        let z = analytic_signal(&RealSignal::new(x.clone(), 1.0).unwrap()).unwrap();
        for (a, b) in z.samples().iter().zip(&x) {
            prop_assert!((a.re - b).abs() < 1e-12);
        }
    }

    #[test]
    fn stft_linearity((x, y) in pair(8, 200), a in -2.0f64..2.0, b in -2.0f64..2.0, hop in 1usize..9) {
        let w = make_window(WindowKind::Hann, 16, None, 1.0).unwrap();
        let sx = stft(&RealSignal::new(x.clone(), 1.0).unwrap(), &w, hop, 32).unwrap();
        let sy = stft(&RealSignal::new(y.clone(), 1.0).unwrap(), &w, hop, 32).unwrap();
        let comb: Vec<f64> = x.iter().zip(&y).map(|(p, q)| a * p + b * q).collect();
        let sc = stft(&RealSignal::new(comb, 1.0).unwrap(), &w, hop, 32).unwrap();
        for ((u, v), c) in sx.values().iter().zip(sy.values()).zip(sc.values()) {
            prop_assert!((u * a + v * b - c).norm() < 1e-9);
        }
    }

    #[test]
    fn stft_shift_moves_frames(x in real_signal(16, 120), hop in 1usize..6) {
        // Delaying by one hop shifts every interior frame by one.
        let w = make_window(WindowKind::Hann, 8, None, 1.0).unwrap();
        let mut delayed = vec![0.0; hop];
        delayed.extend(&x);
        let a = stft(&RealSignal::new(x.clone(), 1.0).unwrap(), &w, hop, 8).unwrap();
        let b = stft(&RealSignal::new(delayed, 1.0).unwrap(), &w, hop, 8).unwrap();
        for m in 0..a.n_time() {
            for k in 0..a.n_freq() {
                prop_assert!((a.get(k, m) - b.get(k, m + 1)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn gaussian_windows_respect_bound(sigma_samples in 2.0f64..60.0, fs in 10.0f64..10_000.0) {
        let sigma = sigma_samples / fs;
        let w = Window::gaussian(1.0 / (2.0 * sigma * sigma), fs).unwrap();
        let tb = time_bandwidth_product(&w).unwrap();
        prop_assert!(tb >= UNCERTAINTY_BOUND - 1e-6);
        prop_assert!((tb / UNCERTAINTY_BOUND - 1.0).abs() < 0.02);
    }

    #[test]
    fn cwt_linearity((x, y) in pair(16, 160), a in -2.0f64..2.0) {
        let p = MorletParams::default();
        let g = ScaleGrid::geometric(&p, 4.0, 40.0, 4).unwrap();
        let fs = 100.0;
        let cx = cwt(&RealSignal::new(x.clone(), fs).unwrap(), &p, &g).unwrap();
        let cy = cwt(&RealSignal::new(y.clone(), fs).unwrap(), &p, &g).unwrap();
        let comb: Vec<f64> = x.iter().zip(&y).map(|(u, v)| a * u + v).collect();
        let cc = cwt(&RealSignal::new(comb, fs).unwrap(), &p, &g).unwrap();
        for ((u, v), c) in cx.coeffs.values().iter().zip(cy.coeffs.values()).zip(cc.coeffs.values()) {
            prop_assert!((u * a + v - c).norm() < 1e-9);
        }
    }

    #[test]
    fn stockwell_rows_sum_to_spectrum(x in real_signal(4, 200)) {
        let n = x.len();
        let fs = 64.0;
        let st = stockwell(&RealSignal::new(x.clone(), fs).unwrap(), 0.0, fs / 2.0).unwrap();
        let oracle = direct_dft(&x.iter().map(|&v| Complex64::new(v, 0.0)).collect::<Vec<_>>());
        for k in 0..st.n_freq() {
            let sum: Complex64 = st.row(k).iter().sum();
            prop_assert!((sum - oracle[k]).norm() < 1e-9 * n as f64);
        }
    }

    #[test]
    fn lag_grid_is_hermitian(x in complex_signal(2, 80)) {
        let n = x.len();
        let r = instantaneous_autocorrelation(&ComplexSignal::new(x.clone(), 1.0).unwrap(), n / 2).unwrap();
        for t in 0..n {
            prop_assert_eq!(r.get(t, 0).re, x[t].norm_sqr());
            for m in 1..=(n / 2) as isize {
                prop_assert!((r.get(t, -m) - r.get(t, m).conj()).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn wvd_is_real_and_quadratic(x in real_signal(4, 150), a in 0.1f64..3.0) {
        let sig = RealSignal::new(x, 10.0).unwrap();
        let out = wvd_with(&sig, &WvdOptions::default()).unwrap();
        let peak = out.grid.values().iter().fold(1.0f64, |m, v| m.max(v.abs()));
        prop_assert!(out.imag_residual < 1e-9 * peak);
        let scaled = wvd(&sig.scaled(a)).unwrap();
        for (u, v) in out.grid.values().iter().zip(scaled.values()) {
            prop_assert!((u * a * a - v).abs() < 1e-9 * peak * a * a);
        }
    }

    #[test]
    fn wvd_time_marginal(f1 in 10.0f64..40.0, f2 in 10.0f64..40.0, a2 in 0.0f64..0.5) {
        // Components sit at least 50 bins inside the band so the lag
        // window's leakage past DC and fs/2 stays small.
        let fs = 100.0;
        let n = 1024;
        let x: Vec<f64> = (0..n)
            .map(|i| {
                let t = i as f64 / fs;
                (2.0 * PI * f1 * t).cos() + a2 * (2.0 * PI * f2 * t).sin()
            })
            .collect();
        let sig = RealSignal::new(x, fs).unwrap();
        let opts = WvdOptions { max_lag: Some(256), ..Default::default() };
        let out = wvd_with(&sig, &opts).unwrap();
        let z = analytic_signal(&sig).unwrap();
        let (lo, hi) = out.interior.unwrap();
        for t in (lo..=hi).step_by(32) {
            let p = z.samples()[t].norm_sqr();
            let m: f64 = out.grid.column(t).iter().sum::<f64>() / out.marginal_scale;
            prop_assert!((m - p).abs() <= 0.01 * p, "t={} marginal {} power {}", t, m, p);
        }
    }

    #[test]
    fn spwvd_identity_kernel_is_exact(x in real_signal(4, 120)) {
        let sig = RealSignal::new(x, 1.0).unwrap();
        let (a, b) = (wvd(&sig).unwrap(), spwvd(&sig, &SmoothingKernel::identity()).unwrap());
        prop_assert_eq!(a.values(), b.values());
    }

    #[test]
    fn grid_file_roundtrip(
        nf in 1usize..12,
        nt in 1usize..12,
        seed in vec(-1e6f64..1e6, 144),
        kind_tag in 0u8..5,
        db in any::<bool>(),
        log in any::<bool>(),
    ) {
        let kind = TransformKind::from_tag(kind_tag).unwrap();
        let scale = if db { ValueScale::Decibel } else { ValueScale::Linear };
        let signed = db || kind.is_signed();
        let values = seed[..nf * nt].iter().map(|v| if signed { *v } else { v.abs() }).collect();
        let g = TfGrid::new(
            values,
            (0..nf).map(|k| k as f64 * 1.5).collect(),
            (0..nt).map(|t| t as f64 * 0.25 - 1.0).collect(),
            kind,
            scale,
        )
        .unwrap()
        .with_log_freq(log);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.tfgrid");
        write_grid(&g, &path, GridFormat::Tfgrid).unwrap();
        prop_assert_eq!(read_grid(&path).unwrap(), g);
    }
}

#[test]
fn wvd_superposition_residual_sits_at_midpoint() {
    let fs = 1000.0;
    let n = 512;
    let tone = |f: f64| RealSignal::new((0..n).map(|i| (2.0 * PI * f * i as f64 / fs).cos()).collect(), fs).unwrap();
    let (x1, x2) = (tone(100.0), tone(300.0));
    let sum = RealSignal::new(x1.samples().iter().zip(x2.samples()).map(|(a, b)| a + b).collect(), fs).unwrap();
    let (w1, w2, w) = (wvd(&x1).unwrap(), wvd(&x2).unwrap(), wvd(&sum).unwrap());
    let residual: Vec<f64> = w
        .values()
        .iter()
        .zip(w1.values())
        .zip(w2.values())
        .map(|((s, a), b)| s - a - b)
        .collect();
    let norm: f64 = residual.iter().map(|v| v * v).sum::<f64>().sqrt();
    assert!(norm > 0.0);
    let grid = TfGrid::new(residual, w.freq_axis().to_vec(), w.time_axis().to_vec(), TransformKind::Wvd, ValueScale::Linear)
        .unwrap();
    let energy: Vec<f64> = (0..grid.n_freq()).map(|k| grid.row(k).iter().map(|v| v * v).sum()).collect();
    let k = tfkit::measure::peak_index(&energy).unwrap();
    assert!((grid.freq_axis()[k] - 200.0).abs() <= grid.freq_axis()[1], "{}", grid.freq_axis()[k]);
    let report = cross_term_report(&w, 100.0, 300.0).unwrap();
    assert!(report.cross_present);
}
