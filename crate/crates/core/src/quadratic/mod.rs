//! Instantaneous autocorrelation, the Wigner-Ville distribution, its
//! smoothed pseudo variant and cross-term measurements.

mod cross;
mod lag;
mod smoothing;
mod wvd;

pub use cross::{cross_term_report, CrossTermReport};
pub use lag::{instantaneous_autocorrelation, LagGrid};
pub use smoothing::{smooth, spwvd, spwvd_with, SmoothingKernel};
pub use wvd::{wvd, wvd_with, WvdOptions, WvdOutput};
