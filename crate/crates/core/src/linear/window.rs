use crate::error::{Result, TfError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowKind {
    Rectangular,
    Hann,
    Gaussian,
    /// Arbitrary caller-supplied taper.
    Custom,
}

/// Finite tapering sequence.
///
/// The center sample is index `len / 2`; for odd lengths the window is
/// symmetric about it. Gaussian windows evaluate `exp(-alpha t^2)` with `t`
/// in seconds relative to the center, so the center coefficient is exactly 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Window {
    kind: WindowKind,
    coefficients: Vec<f64>,
    alpha: Option<f64>,
    sample_rate: f64,
}

/// Gaussian standard deviation in seconds for `exp(-alpha t^2)`.
pub fn gaussian_sigma(alpha: f64) -> f64 {
    (1.0 / (2.0 * alpha)).sqrt()
}

/// Odd window length covering +-4 sigma of `exp(-alpha t^2)`.
pub fn gaussian_support_len(alpha: f64, sample_rate: f64) -> usize {
    let half = (4.0 * gaussian_sigma(alpha) * sample_rate).ceil() as usize;
    2 * half.max(1) + 1
}

impl Window {
    pub fn new(kind: WindowKind, length: usize, alpha: Option<f64>, sample_rate: f64) -> Result<Self> {
        make_window(kind, length, alpha, sample_rate)
    }

    /// Gaussian window truncated at +-4 sigma.
    pub fn gaussian(alpha: f64, sample_rate: f64) -> Result<Self> {
        check_alpha(Some(alpha))?;
        make_window(
            WindowKind::Gaussian,
            gaussian_support_len(alpha, sample_rate),
            Some(alpha),
            sample_rate,
        )
    }

    pub fn from_coefficients(coefficients: Vec<f64>, sample_rate: f64) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(TfError::InvalidLength("window length must be at least 1".into()));
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(TfError::DegenerateWindow("window coefficients must be finite".into()));
        }
        check_rate(sample_rate)?;
        Ok(Self {
            kind: WindowKind::Custom,
            coefficients,
            alpha: None,
            sample_rate,
        })
    }

    pub fn kind(&self) -> WindowKind {
        self.kind
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn alpha(&self) -> Option<f64> {
        self.alpha
    }

    pub fn sample_rate(&self) -> f64 {
        self.sample_rate
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn center(&self) -> usize {
        self.coefficients.len() / 2
    }

    pub fn energy(&self) -> f64 {
        self.coefficients.iter().map(|c| c * c).sum()
    }
}

fn check_rate(sample_rate: f64) -> Result<()> {
    if !(sample_rate.is_finite() && sample_rate > 0.0) {
        return Err(TfError::InvalidSpec(format!(
            "sample rate must be positive, got {sample_rate}"
        )));
    }
    Ok(())
}

fn check_alpha(alpha: Option<f64>) -> Result<f64> {
    let alpha = alpha.ok_or(TfError::MissingParameter("alpha"))?;
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(TfError::DegenerateWindow(format!(
            "gaussian alpha must be positive, got {alpha}"
        )));
    }
    Ok(alpha)
}

pub fn make_window(kind: WindowKind, length: usize, alpha: Option<f64>, sample_rate: f64) -> Result<Window> {
    if length == 0 {
        return Err(TfError::InvalidLength("window length must be at least 1".into()));
    }
    check_rate(sample_rate)?;
    let center = length / 2;
    let (coefficients, alpha) = match kind {
        WindowKind::Rectangular => (vec![1.0; length], None),
        WindowKind::Hann => {
            let c = if length == 1 {
                vec![1.0]
            } else {
                let denom = (length - 1) as f64;
                (0..length)
                    .map(|n| 0.5 - 0.5 * (2.0 * std::f64::consts::PI * n as f64 / denom).cos())
                    .collect()
            };
            (c, None)
        }
        WindowKind::Gaussian => {
            let alpha = check_alpha(alpha)?;
            let c = (0..length)
                .map(|n| {
                    let t = (n as f64 - center as f64) / sample_rate;
                    (-alpha * t * t).exp()
                })
                .collect();
            (c, Some(alpha))
        }
        WindowKind::Custom => {
            return Err(TfError::InvalidSpec(
                "custom windows are built with Window::from_coefficients".into(),
            ))
        }
    };
    Ok(Window {
        kind,
        coefficients,
        alpha,
        sample_rate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rectangular() {
        let w = make_window(WindowKind::Rectangular, 4, None, 1.0).unwrap();
        assert_eq!(w.coefficients(), &[1.0; 4]);
    }

    #[test]
    fn gaussian_center_and_sigma_point() {
        let fs = 1000.0;
        let sigma = 10.0 / fs;
        let alpha = 1.0 / (2.0 * sigma * sigma);
        let w = make_window(WindowKind::Gaussian, 41, Some(alpha), fs).unwrap();
        let c = w.center();
        assert_eq!(c, 20);
        assert_eq!(w.coefficients()[c], 1.0);
        let expected = (-0.5f64).exp();
        assert!((w.coefficients()[c + 10] - expected).abs() < 1e-12);
        assert!((w.coefficients()[c - 10] - expected).abs() < 1e-12);
        for k in 0..=20 {
            assert_eq!(w.coefficients()[c + k], w.coefficients()[c - k]);
        }
    }

    #[test]
    fn gaussian_even_length_peaks_at_center() {
        let w = make_window(WindowKind::Gaussian, 8, Some(1e4), 100.0).unwrap();
        assert_eq!(w.coefficients()[4], 1.0);
        assert_eq!(w.coefficients()[3], w.coefficients()[5]);
    }

    #[test]
    fn gaussian_support_covers_four_sigma() {
        let fs = 1000.0;
        let alpha = 1.0 / (2.0 * 0.01f64.powi(2));
        let w = Window::gaussian(alpha, fs).unwrap();
        assert_eq!(w.len(), 81);
        let edge = w.coefficients()[0];
        assert!((edge - (-8.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn hann_is_symmetric() {
        let w = make_window(WindowKind::Hann, 9, None, 1.0).unwrap();
        assert_eq!(w.coefficients()[0], 0.0);
        assert!((w.coefficients()[4] - 1.0).abs() < 1e-15);
        for k in 0..9 {
            assert!((w.coefficients()[k] - w.coefficients()[8 - k]).abs() < 1e-15);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            make_window(WindowKind::Gaussian, 8, None, 1.0),
            Err(TfError::MissingParameter("alpha"))
        ));
        assert!(make_window(WindowKind::Gaussian, 8, Some(-1.0), 1.0).is_err());
        assert!(make_window(WindowKind::Hann, 0, None, 1.0).is_err());
        assert!(Window::from_coefficients(vec![1.0, f64::NAN], 1.0).is_err());
    }
}
