//! Windows, short-time Fourier transform, spectrogram, Gabor transform and
//! time-bandwidth metrology.

mod stft;
mod uncertainty;
mod window;

pub use stft::{gabor, spectrogram, stft};
pub use uncertainty::{rms_bandwidth, rms_duration, time_bandwidth_product, UNCERTAINTY_BOUND};
pub use window::{gaussian_sigma, gaussian_support_len, make_window, Window, WindowKind};
