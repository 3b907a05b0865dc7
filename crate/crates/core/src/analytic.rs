//! 1D analytic signal, Hilbert transform and log-Gabor scale selection.
//!
//! The analytic signal keeps the DC term, doubles positive frequencies and
//! drops negative ones. The Hilbert transform is the real-valued variant
//! with multiplier `-i·sgn(ω)`, so `analytic = f + i·H{f}` exactly. For even
//! lengths the Nyquist bin is treated like DC: multiplier 1 in the analytic
//! signal and `sgn = 0` in the Hilbert transform.

use crate::error::{Error, Result};
use crate::fft;
use crate::grid::{build_freq_axis_1d, FreqAxis1D};
use crate::image::RealImage;
use rayon::prelude::*;
use rustfft::num_complex::Complex64;
use std::f64::consts::PI;

/// A finite, non-empty real sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal1D {
    samples: Vec<f64>,
}

impl Signal1D {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::InvalidInput("signal is empty".into()));
        }
        if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(format!("non-finite sample at index {i}")));
        }
        Ok(Signal1D { samples })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }
}

/// Complex signal whose spectrum vanishes at negative frequencies.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticSignal1D {
    samples: Vec<Complex64>,
}

impl AnalyticSignal1D {
    /// Wraps an existing complex sequence. The one-sided spectrum property is
    /// not checked.
    pub fn from_samples(samples: Vec<Complex64>) -> Self {
        AnalyticSignal1D { samples }
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Log-Gabor filter specified by centre wavelength (samples/cycle) and shape.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogGabor1DParams {
    center_wavelength: f64,
    sigma0: f64,
}

impl LogGabor1DParams {
    pub fn new(center_wavelength: f64, sigma0: f64) -> Result<Self> {
        validate_log_gabor(center_wavelength, sigma0)?;
        Ok(LogGabor1DParams {
            center_wavelength,
            sigma0,
        })
    }

    pub fn center_wavelength(&self) -> f64 {
        self.center_wavelength
    }

    pub fn sigma0(&self) -> f64 {
        self.sigma0
    }

    /// Centre frequency `2π/λ₀` in radians/sample.
    pub fn omega0(&self) -> f64 {
        2.0 * PI / self.center_wavelength
    }
}

pub(crate) fn validate_log_gabor(center_wavelength: f64, sigma0: f64) -> Result<()> {
    if !(center_wavelength.is_finite() && center_wavelength > 2.0) {
        return Err(Error::InvalidParameter(format!(
            "centre wavelength must be > 2 samples (below Nyquist), got {center_wavelength}"
        )));
    }
    if !(sigma0 > 0.0 && sigma0 < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "sigma0 must lie in (0, 1), got {sigma0}"
        )));
    }
    Ok(())
}

/// Gaussian on a log-frequency axis; zero at DC.
#[inline]
pub(crate) fn log_gabor_gain(abs_omega: f64, omega0: f64, sigma0: f64) -> f64 {
    if abs_omega == 0.0 {
        return 0.0;
    }
    let l = (abs_omega / omega0).ln();
    let s = sigma0.ln();
    (-(l * l) / (2.0 * s * s)).exp()
}

/// `atan2(y, x)` folded into `(-π, π]`, with `0` for the origin.
#[inline]
pub(crate) fn wrapped_angle(y: f64, x: f64) -> f64 {
    if y == 0.0 && x == 0.0 {
        return 0.0;
    }
    let a = y.atan2(x);
    if a <= -PI {
        PI
    } else {
        a
    }
}

fn spectrum(f: &Signal1D) -> Vec<Complex64> {
    let mut buf: Vec<Complex64> = f.samples.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft::fft(&mut buf);
    buf
}

/// Analytic-signal multiplier: 2 on positive bins, 0 on negative, 1 at
/// self-conjugate bins.
fn analytic_multiplier(axis: &FreqAxis1D, k: usize) -> f64 {
    if axis.is_self_conjugate(k) {
        1.0
    } else if axis.omega()[k] > 0.0 {
        2.0
    } else {
        0.0
    }
}

pub fn analytic_signal(f: &Signal1D) -> Result<AnalyticSignal1D> {
    let axis = build_freq_axis_1d(f.len())?;
    let mut spec = spectrum(f);
    for (k, v) in spec.iter_mut().enumerate() {
        *v *= analytic_multiplier(&axis, k);
    }
    fft::ifft(&mut spec);
    Ok(AnalyticSignal1D { samples: spec })
}

/// Real-valued Hilbert transform, multiplier `-i·sgn(ω)`.
pub fn hilbert_transform(f: &Signal1D) -> Result<Signal1D> {
    let axis = build_freq_axis_1d(f.len())?;
    let mut spec = spectrum(f);
    for (k, v) in spec.iter_mut().enumerate() {
        let sgn = if axis.is_self_conjugate(k) {
            0.0
        } else {
            axis.omega()[k].signum()
        };
        *v *= Complex64::new(0.0, -sgn);
    }
    fft::ifft(&mut spec);
    Ok(Signal1D {
        samples: spec.into_iter().map(|c| c.re).collect(),
    })
}

/// Per-bin log-Gabor gain over `axis`.
pub fn log_gabor_response_1d(axis: &FreqAxis1D, p: &LogGabor1DParams) -> Vec<f64> {
    let omega0 = p.omega0();
    axis.omega()
        .iter()
        .map(|w| log_gabor_gain(w.abs(), omega0, p.sigma0))
        .collect()
}

/// Bandpass with a log-Gabor filter, then take the analytic signal.
pub fn filtered_analytic_1d(f: &Signal1D, p: &LogGabor1DParams) -> Result<AnalyticSignal1D> {
    let axis = build_freq_axis_1d(f.len())?;
    let gain = log_gabor_response_1d(&axis, p);
    let mut spec = spectrum(f);
    for (k, v) in spec.iter_mut().enumerate() {
        *v *= analytic_multiplier(&axis, k) * gain[k];
    }
    fft::ifft(&mut spec);
    Ok(AnalyticSignal1D { samples: spec })
}

/// Polar decomposition of an analytic signal: `(amplitude, phase)`.
///
/// Phase lies in `(-π, π]` and is `0` wherever the amplitude is zero.
pub fn local_phase_amplitude_1d(fa: &AnalyticSignal1D) -> (Vec<f64>, Vec<f64>) {
    fa.samples.iter().map(|c| (c.norm(), wrapped_angle(c.im, c.re))).unzip()
}

/// Local phase across scales: one row per wavelength, one column per sample.
pub fn scaleogram(f: &Signal1D, wavelengths: &[f64], sigma0: f64) -> Result<RealImage> {
    if wavelengths.is_empty() {
        return Err(Error::InvalidInput("scaleogram needs at least one wavelength".into()));
    }
    if f.len() < 4 {
        return Err(Error::InvalidInput(format!(
            "scaleogram needs at least 4 samples, got {}",
            f.len()
        )));
    }
    if wavelengths.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidInput("wavelengths must be strictly increasing".into()));
    }
    let params = wavelengths
        .iter()
        .map(|&l| LogGabor1DParams::new(l, sigma0))
        .collect::<Result<Vec<_>>>()?;
    let rows = params
        .par_iter()
        .map(|p| filtered_analytic_1d(f, p).map(|fa| local_phase_amplitude_1d(&fa).1))
        .collect::<Result<Vec<_>>>()?;
    Ok(RealImage::from_raw(rows.len(), f.len(), rows.concat()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(v: Vec<f64>) -> Signal1D {
        Signal1D::new(v).unwrap()
    }

    #[test]
    fn rejects_bad_signals_and_params() {
        assert!(Signal1D::new(vec![]).is_err());
        assert!(Signal1D::new(vec![1.0, f64::INFINITY]).is_err());
        assert!(LogGabor1DParams::new(2.0, 0.5).is_err());
        assert!(LogGabor1DParams::new(10.0, 1.0).is_err());
        assert!(LogGabor1DParams::new(10.0, 0.0).is_err());
        assert!(LogGabor1DParams::new(2.5, 0.99).is_ok());
    }

    #[test]
    fn constant_passes_through_analytic() {
        let fa = analytic_signal(&sig(vec![3.0; 7])).unwrap();
        for c in fa.samples() {
            assert!((c - Complex64::new(3.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn cosine_becomes_complex_exponential() {
        let n = 8;
        let f = sig((0..n).map(|k| (2.0 * PI * k as f64 / n as f64).cos()).collect());
        let fa = analytic_signal(&f).unwrap();
        for (k, c) in fa.samples().iter().enumerate() {
            let e = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64);
            assert!((c - e).norm() < 1e-14);
        }
    }

    #[test]
    fn hilbert_of_constant_is_zero() {
        let h = hilbert_transform(&sig(vec![-2.5; 10])).unwrap();
        assert!(h.samples().iter().all(|v| v.abs() < 1e-15));
    }

    #[test]
    fn hilbert_of_cosine_is_sine() {
        let n = 32;
        let f = sig((0..n).map(|k| (2.0 * PI * 3.0 * k as f64 / n as f64).cos()).collect());
        let h = hilbert_transform(&f).unwrap();
        for (k, v) in h.samples().iter().enumerate() {
            assert!((v - (2.0 * PI * 3.0 * k as f64 / n as f64).sin()).abs() < 1e-12);
        }
    }

    #[test]
    fn analytic_is_signal_plus_i_hilbert() {
        let f = sig((0..13).map(|k| ((k * k) as f64 * 0.3).sin()).collect());
        let fa = analytic_signal(&f).unwrap();
        let h = hilbert_transform(&f).unwrap();
        for ((c, &x), &y) in fa.samples().iter().zip(f.samples()).zip(h.samples()) {
            assert!((c.re - x).abs() < 1e-12);
            assert!((c.im - y).abs() < 1e-12);
        }
    }

    #[test]
    fn log_gabor_values() {
        let p = LogGabor1DParams::new(5.0, 0.5).unwrap();
        let w0 = p.omega0();
        assert_eq!(log_gabor_gain(w0, w0, 0.5), 1.0);
        assert_eq!(log_gabor_gain(0.0, w0, 0.5), 0.0);
        assert!((log_gabor_gain(2.0 * w0, w0, 0.5) - (-0.5f64).exp()).abs() < 1e-12);
        let axis = build_freq_axis_1d(10).unwrap();
        let g = log_gabor_response_1d(&axis, &p);
        assert_eq!(g[0], 0.0);
        // bins 2 and 8 are ±ω₀ for λ₀ = 5, n = 10
        assert!((g[2] - 1.0).abs() < 1e-15);
        assert_eq!(g[2], g[8]);
    }

    #[test]
    fn zero_signal_has_zero_phase() {
        let (a, p) = local_phase_amplitude_1d(&AnalyticSignal1D::from_samples(vec![Complex64::new(0.0, 0.0); 4]));
        assert!(a.iter().all(|&v| v == 0.0));
        assert!(p.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn phase_is_in_half_open_range() {
        let fa = AnalyticSignal1D::from_samples(vec![
            Complex64::new(-1.0, -0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(1.0, 0.0),
        ]);
        let (_, p) = local_phase_amplitude_1d(&fa);
        assert_eq!(p, vec![PI, PI, 0.0]);
    }

    #[test]
    fn scaleogram_errors_and_shape() {
        let f = sig((0..64).map(|k| (k as f64 * 0.4).sin()).collect());
        assert!(scaleogram(&f, &[], 0.6).is_err());
        assert!(scaleogram(&sig(vec![1.0, 2.0, 3.0]), &[5.0], 0.6).is_err());
        assert!(scaleogram(&f, &[10.0, 5.0], 0.6).is_err());
        assert!(scaleogram(&f, &[2.0], 0.6).is_err());
        let s = scaleogram(&f, &[5.0, 10.0, 20.0], 0.6).unwrap();
        assert_eq!(s.dims(), (3, 64));
    }
}
