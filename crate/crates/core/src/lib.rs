//! Analytic signals of 1D sequences and monogenic signals of 2D images.
//!
//! Everything is computed by multiplication in the discrete frequency domain:
//! the Hilbert transform and its isotropic 2D generalisation (the Riesz
//! transform) are applied together with log-Gabor bandpass filters, and the
//! resulting quadrature triples are decomposed into local amplitude, phase
//! and orientation. Phase-based feature measures (symmetry, asymmetry and
//! their signed/oriented variants) are built on top.
//!
//! Conventions shared by every module:
//!
//! * frequencies are angular, in radians per sample, laid out in FFT bin order;
//! * rasters are row-major, the first index is the vertical (`y`) axis and
//!   `ωx` varies along columns;
//! * the DFT's periodic boundary model applies everywhere (no implicit padding).

pub mod analytic;
pub mod cli;
pub mod error;
pub mod features;
pub mod fft;
pub mod filterbank;
pub mod grid;
pub mod image;
pub mod io;
pub mod monogenic;

pub use rustfft::num_complex::Complex64;

pub use analytic::{
    analytic_signal, filtered_analytic_1d, hilbert_transform, local_phase_amplitude_1d, log_gabor_response_1d,
    scaleogram, AnalyticSignal1D, LogGabor1DParams, Signal1D,
};
pub use error::{Error, Result};
pub use features::{
    feature_asymmetry, feature_symmetry, multiscale_asymmetry, multiscale_oriented_asymmetry,
    multiscale_signed_symmetry, multiscale_symmetry, oriented_asymmetry, signed_symmetry, FeatureData, FeatureKind,
    FeatureMap, FeatureParams,
};
pub use filterbank::{
    build_filter_bank, complex_odd_filter, radial_log_gabor_2d, riesz_multipliers, FilterBank, FilterBankCache,
    LogGabor2DParams,
};
pub use grid::{build_freq_axis_1d, build_grid_2d, FreqAxis1D, FrequencyGrid2D};
pub use image::{ComplexImage, RealImage};
pub use monogenic::{
    combined_odd, compute_monogenic, compute_monogenic_separate, local_amplitude, local_model_patch, local_orientation,
    local_phase, monogenic_maps, MonogenicMaps, MonogenicScale,
};
