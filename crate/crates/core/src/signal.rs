//! Uniformly sampled real and complex signals.

use num_complex::Complex64;

use crate::error::{Result, TfError};

fn check_rate(sample_rate: f64) -> Result<()> {
    if !(sample_rate.is_finite() && sample_rate > 0.0) {
        return Err(TfError::InvalidSpec(format!(
            "sample rate must be finite and positive, got {sample_rate}"
        )));
    }
    Ok(())
}

/// Real-valued samples with a sample rate in Hz.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSignal {
    samples: Vec<f64>,
    sample_rate: f64,
}

impl RealSignal {
    pub fn new(samples: Vec<f64>, sample_rate: f64) -> Result<Self> {
        check_rate(sample_rate)?;
        if samples.is_empty() {
            return Err(TfError::InvalidLength("signal must hold at least one sample".into()));
        }
        Ok(Self {
            samples,
            sample_rate,
        })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    pub fn sample_rate(&self) -> f64 {
        self.sample_rate
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate
    }

    /// Sum of squared samples.
    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|v| v * v).sum()
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            samples: self.samples.iter().map(|v| v * factor).collect(),
            sample_rate: self.sample_rate,
        }
    }

    pub fn to_complex(&self) -> ComplexSignal {
        ComplexSignal {
            samples: self.samples.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
            sample_rate: self.sample_rate,
        }
    }
}

/// Complex-valued samples with a sample rate in Hz.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSignal {
    samples: Vec<Complex64>,
    sample_rate: f64,
}

impl ComplexSignal {
    pub fn new(samples: Vec<Complex64>, sample_rate: f64) -> Result<Self> {
        check_rate(sample_rate)?;
        if samples.is_empty() {
            return Err(TfError::InvalidLength("signal must hold at least one sample".into()));
        }
        Ok(Self {
            samples,
            sample_rate,
        })
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<Complex64> {
        self.samples
    }

    pub fn sample_rate(&self) -> f64 {
        self.sample_rate
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn real_part(&self) -> RealSignal {
        RealSignal {
            samples: self.samples.iter().map(|z| z.re).collect(),
            sample_rate: self.sample_rate,
        }
    }
}

/// Common view over real and complex signals used by the linear transforms.
pub trait Signal {
    fn sample_rate(&self) -> f64;
    fn len(&self) -> usize;
    fn is_real(&self) -> bool;
    /// Sample `i` widened to complex.
    fn at(&self, i: usize) -> Complex64;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Signal for RealSignal {
    fn sample_rate(&self) -> f64 {
        self.sample_rate
    }
    fn len(&self) -> usize {
        self.samples.len()
    }
    fn is_real(&self) -> bool {
        true
    }
    fn at(&self, i: usize) -> Complex64 {
        Complex64::new(self.samples[i], 0.0)
    }
}

impl Signal for ComplexSignal {
    fn sample_rate(&self) -> f64 {
        self.sample_rate
    }
    fn len(&self) -> usize {
        self.samples.len()
    }
    fn is_real(&self) -> bool {
        false
    }
    fn at(&self, i: usize) -> Complex64 {
        self.samples[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_rate_and_empty() {
        assert!(RealSignal::new(vec![1.0], 0.0).is_err());
        assert!(RealSignal::new(vec![1.0], f64::NAN).is_err());
        assert!(RealSignal::new(vec![], 10.0).is_err());
        assert!(ComplexSignal::new(vec![], 10.0).is_err());
    }

    #[test]
    fn energy_and_duration() {
        let s = RealSignal::new(vec![1.0, -2.0, 2.0, 0.0], 2.0).unwrap();
        assert_eq!(s.energy(), 9.0);
        assert_eq!(s.duration(), 2.0);
    }
}
