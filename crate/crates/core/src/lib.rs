//! Time-frequency analysis toolkit.
//!
//! The crate is organised around the transforms it provides:
//!
//! - [`engine`]: DFT machinery and analytic-signal construction.
//! - [`forge`]: synthetic test signals and loaders for recorded data.
//! - [`linear`]: windows, STFT, spectrogram, Gabor transform and the
//!   time-bandwidth product.
//! - [`multiscale`]: Morlet continuous wavelet transform and the Stockwell
//!   transform.
//! - [`quadratic`]: instantaneous autocorrelation, Wigner-Ville distribution,
//!   cross-term metrology and the smoothed pseudo Wigner-Ville distribution.
//! - [`grid`]: the [`TfGrid`] container, dB conversion, file formats and
//!   PPM heatmap rendering.
//! - [`gallery`]: renders every transform for a set of synthetic signals.
//!
//! All transforms are pure functions. Independent frames, scales and
//! analysis frequencies are evaluated in parallel with rayon and collected
//! in order, so results do not depend on the worker count.

pub mod engine;
pub mod error;
pub mod forge;
pub mod gallery;
pub mod grid;
pub mod linear;
pub mod measure;
pub mod multiscale;
pub mod quadratic;
pub mod signal;

pub use error::{Result, TfError};
pub use grid::{TfGrid, TransformKind, ValueScale};
pub use signal::{ComplexSignal, RealSignal, Signal};

pub use num_complex::Complex64;
