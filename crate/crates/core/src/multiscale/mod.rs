//! Transforms with frequency-dependent resolution: the Morlet continuous
//! wavelet transform and the Stockwell transform.

mod cwt;
mod stockwell;

pub use cwt::{cwt, cwt_with, morlet_wavelet, scalogram, Cwt, MorletParams, ScaleGrid, Wavelet};
pub use stockwell::{stockwell, stockwell_power, stockwell_with};

/// How the transforms treat the ends of the signal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    /// Circular convolution; keeps the spectral identities exact.
    #[default]
    Periodic,
    /// Zero-pad before transforming so the ends do not wrap onto each other.
    ZeroPad,
}
