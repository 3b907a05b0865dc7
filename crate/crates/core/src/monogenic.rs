//! Monogenic signal of an image and its spherical-polar decomposition.
//!
//! At each bank scale the image spectrum is multiplied by the even filter
//! and by the complex odd filter; two inverse transforms give the even part
//! `f_e` and the complex odd response `f_o1 + i·f_o2`.
//!
//! From the triple `(f_e, f_o1, f_o2)`:
//!
//! * amplitude `A = sqrt(f_e² + f_o1² + f_o2²)`
//! * phase `φ = atan2(f_o, f_e) ∈ [0, π]` with `f_o = sqrt(f_o1² + f_o2²)`
//! * orientation `θ = atan2(f_o2, f_o1) ∈ (-π, π]`, pointing towards
//!   increasing intensity
//!
//! Where the relevant magnitude is exactly zero, phase and orientation are
//! reported as `0`; callers should mask with the amplitude or odd magnitude.

use crate::analytic::wrapped_angle;
use crate::error::{Error, Result};
use crate::fft;
use crate::filterbank::{riesz_multipliers, FilterBank, LogGabor2DParams};
use crate::image::{ComplexImage, RealImage};
use rayon::prelude::*;
use rustfft::num_complex::Complex64;

/// Largest imaginary residue tolerated on an inverse transform that should be real,
/// relative to the output (or input) magnitude.
const REALNESS_TOLERANCE: f64 = 1e-9;

/// The even part and both odd parts at one filter scale.
#[derive(Debug, Clone, PartialEq)]
pub struct MonogenicScale {
    even: RealImage,
    odd1: RealImage,
    odd2: RealImage,
    params: LogGabor2DParams,
}

impl MonogenicScale {
    pub fn new(even: RealImage, odd1: RealImage, odd2: RealImage, params: LogGabor2DParams) -> Result<Self> {
        for other in [&odd1, &odd2] {
            if other.dims() != even.dims() {
                return Err(Error::ShapeMismatch {
                    expected: even.dims(),
                    actual: other.dims(),
                });
            }
        }
        Ok(MonogenicScale {
            even,
            odd1,
            odd2,
            params,
        })
    }

    pub fn even(&self) -> &RealImage {
        &self.even
    }

    pub fn odd1(&self) -> &RealImage {
        &self.odd1
    }

    pub fn odd2(&self) -> &RealImage {
        &self.odd2
    }

    pub fn params(&self) -> &LogGabor2DParams {
        &self.params
    }

    pub fn dims(&self) -> (usize, usize) {
        self.even.dims()
    }

    /// `f_o1 + i·f_o2`.
    pub fn odd_complex(&self) -> ComplexImage {
        ComplexImage::from_parts(&self.odd1, &self.odd2).expect("parts share dimensions")
    }

    /// Top-left window of every part, used to undo mirror padding.
    pub fn crop(&self, height: usize, width: usize) -> Result<MonogenicScale> {
        Ok(MonogenicScale {
            even: self.even.crop(height, width)?,
            odd1: self.odd1.crop(height, width)?,
            odd2: self.odd2.crop(height, width)?,
            params: self.params,
        })
    }

    /// Iterates `(f_e, f_o1, f_o2)` per pixel.
    pub(crate) fn triples(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        self.even
            .data()
            .iter()
            .zip(self.odd1.data())
            .zip(self.odd2.data())
            .map(|((&e, &o1), &o2)| (e, o1, o2))
    }

    fn map_pixels(&self, f: impl Fn(f64, f64, f64) -> f64) -> RealImage {
        let (h, w) = self.dims();
        RealImage::from_raw(h, w, self.triples().map(|(e, o1, o2)| f(e, o1, o2)).collect())
    }
}

/// Amplitude, phase, orientation and combined odd magnitude at one scale.
#[derive(Debug, Clone, PartialEq)]
pub struct MonogenicMaps {
    pub amplitude: RealImage,
    pub phase: RealImage,
    pub orientation: RealImage,
    pub odd_magnitude: RealImage,
}

fn check_input(img: &RealImage, bank: &FilterBank) -> Result<Vec<Complex64>> {
    if img.dims() != bank.dims() {
        return Err(Error::ShapeMismatch {
            expected: bank.dims(),
            actual: img.dims(),
        });
    }
    if img.data().iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("image contains non-finite pixels".into()));
    }
    Ok(fft::fft2_real(img.height(), img.width(), img.data()))
}

fn filtered_inverse<M: Copy>((h, w): (usize, usize), spectrum: &[Complex64], filter: &[M]) -> Vec<Complex64>
where
    Complex64: std::ops::Mul<M, Output = Complex64>,
{
    let mut buf: Vec<Complex64> = spectrum.iter().zip(filter).map(|(&s, &g)| s * g).collect();
    fft::ifft2(h, w, &mut buf);
    buf
}

fn real_part_checked(buf: Vec<Complex64>, reference: f64, what: &str) -> Result<Vec<f64>> {
    let (re_max, im_max) = buf
        .iter()
        .fold((0.0f64, 0.0f64), |(r, i), c| (r.max(c.re.abs()), i.max(c.im.abs())));
    let scale = re_max.max(reference);
    if im_max > REALNESS_TOLERANCE * scale {
        return Err(Error::Numerical(format!(
            "{what} has imaginary residue {im_max:e} against magnitude {scale:e}"
        )));
    }
    Ok(buf.into_iter().map(|c| c.re).collect())
}

/// Monogenic triple at every scale of `bank`.
///
/// Uses the complex odd filter: one inverse transform for the even part and
/// one for both odd parts.
pub fn compute_monogenic(img: &RealImage, bank: &FilterBank) -> Result<Vec<MonogenicScale>> {
    let spectrum = check_input(img, bank)?;
    let dims = img.dims();
    let (h, w) = dims;
    let reference = img.max_abs();
    (0..bank.len())
        .into_par_iter()
        .map(|s| {
            let even = filtered_inverse(dims, &spectrum, bank.even(s).data());
            let even = real_part_checked(even, reference, "even part")?;
            let odd = filtered_inverse(dims, &spectrum, bank.odd_complex(s).data());
            let (odd1, odd2): (Vec<f64>, Vec<f64>) = odd.into_iter().map(|c| (c.re, c.im)).unzip();
            Ok(MonogenicScale {
                even: RealImage::from_raw(h, w, even),
                odd1: RealImage::from_raw(h, w, odd1),
                odd2: RealImage::from_raw(h, w, odd2),
                params: bank.scales()[s],
            })
        })
        .collect()
}

/// Reference path: applies each Riesz multiplier separately (three inverse
/// transforms per scale). Produces the same triple as [`compute_monogenic`].
pub fn compute_monogenic_separate(img: &RealImage, bank: &FilterBank) -> Result<Vec<MonogenicScale>> {
    let spectrum = check_input(img, bank)?;
    let dims = img.dims();
    let (h, w) = dims;
    let reference = img.max_abs();
    let (m1, m2) = riesz_multipliers(bank.grid());
    (0..bank.len())
        .map(|s| {
            let ge = bank.even(s).data();
            let g1: Vec<Complex64> = m1.data().iter().zip(ge).map(|(&m, &g)| m * g).collect();
            let g2: Vec<Complex64> = m2.data().iter().zip(ge).map(|(&m, &g)| m * g).collect();
            let even = real_part_checked(filtered_inverse(dims, &spectrum, ge), reference, "even part")?;
            let odd1 = real_part_checked(filtered_inverse(dims, &spectrum, &g1), reference, "odd part 1")?;
            let odd2 = real_part_checked(filtered_inverse(dims, &spectrum, &g2), reference, "odd part 2")?;
            Ok(MonogenicScale {
                even: RealImage::from_raw(h, w, even),
                odd1: RealImage::from_raw(h, w, odd1),
                odd2: RealImage::from_raw(h, w, odd2),
                params: bank.scales()[s],
            })
        })
        .collect()
}

pub fn local_amplitude(ms: &MonogenicScale) -> RealImage {
    ms.map_pixels(|e, o1, o2| (e * e + o1 * o1 + o2 * o2).sqrt())
}

/// Elevation angle in `[0, π]`; `0` where the amplitude vanishes.
pub fn local_phase(ms: &MonogenicScale) -> RealImage {
    ms.map_pixels(|e, o1, o2| {
        let fo = o1.hypot(o2);
        if fo == 0.0 && e == 0.0 {
            0.0
        } else {
            fo.atan2(e)
        }
    })
}

/// Azimuth of the odd response in `(-π, π]`; `0` where the odd part vanishes.
pub fn local_orientation(ms: &MonogenicScale) -> RealImage {
    ms.map_pixels(|_, o1, o2| wrapped_angle(o2, o1))
}

/// `f_o = sqrt(f_o1² + f_o2²)`. Discards orientation.
pub fn combined_odd(ms: &MonogenicScale) -> RealImage {
    ms.map_pixels(|_, o1, o2| o1.hypot(o2))
}

pub fn monogenic_maps(ms: &MonogenicScale) -> MonogenicMaps {
    MonogenicMaps {
        amplitude: local_amplitude(ms),
        phase: local_phase(ms),
        orientation: local_orientation(ms),
        odd_magnitude: combined_odd(ms),
    }
}

/// Local cosine model around a pixel, sampled on a `size x size` window.
///
/// `patch(x') = A·cos(x'·n - φ)` with `n = (cos θ, sin θ)` and `x'` measured
/// in pixels from the window centre. With `θ` pointing uphill this
/// reproduces the image near the pixel; see [`local_model_patch_with_frequency`]
/// for structures whose wavelength is not `2π` pixels.
pub fn local_model_patch(amplitude: f64, phase: f64, orientation: f64, size: usize) -> Result<RealImage> {
    local_model_patch_with_frequency(amplitude, phase, orientation, 1.0, size)
}

/// As [`local_model_patch`], with `x'·n` scaled by `omega` radians per pixel.
pub fn local_model_patch_with_frequency(
    amplitude: f64,
    phase: f64,
    orientation: f64,
    omega: f64,
    size: usize,
) -> Result<RealImage> {
    if size < 3 || size.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "model patch size must be odd and at least 3, got {size}"
        )));
    }
    if ![amplitude, phase, orientation, omega].iter().all(|v| v.is_finite()) {
        return Err(Error::InvalidInput("model parameters must be finite".into()));
    }
    let c = (size / 2) as f64;
    let (nx, ny) = (orientation.cos(), orientation.sin());
    RealImage::from_fn(size, size, |y, x| {
        let proj = (x as f64 - c) * nx + (y as f64 - c) * ny;
        amplitude * (omega * proj - phase).cos()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filterbank::build_filter_bank;
    use crate::grid::build_grid_2d;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn scale_from(e: f64, o1: f64, o2: f64) -> MonogenicScale {
        let p = LogGabor2DParams::new(10.0, 0.5).unwrap();
        let im = |v| RealImage::new(1, 1, vec![v]).unwrap();
        MonogenicScale::new(im(e), im(o1), im(o2), p).unwrap()
    }

    #[test]
    fn pointwise_examples() {
        let ms = scale_from(3.0, 0.0, 4.0);
        assert_eq!(local_amplitude(&ms).data()[0], 5.0);
        assert_eq!(combined_odd(&scale_from(0.0, 3.0, 4.0)).data()[0], 5.0);
        assert_eq!(combined_odd(&scale_from(1.0, 0.0, 0.0)).data()[0], 0.0);

        assert_eq!(local_phase(&scale_from(1.0, 0.0, 0.0)).data()[0], 0.0);
        assert_eq!(local_phase(&scale_from(-1.0, 0.0, 0.0)).data()[0], PI);
        assert_eq!(local_phase(&scale_from(0.0, 0.3, 0.0)).data()[0], FRAC_PI_2);
        assert_eq!(local_phase(&scale_from(0.0, 0.0, 0.0)).data()[0], 0.0);
        assert_eq!(local_phase(&scale_from(-0.0, 0.0, 0.0)).data()[0], 0.0);

        assert_eq!(local_orientation(&scale_from(1.0, 0.0, 2.0)).data()[0], FRAC_PI_2);
        assert_eq!(local_orientation(&scale_from(1.0, 0.0, 0.0)).data()[0], 0.0);
        assert_eq!(local_orientation(&scale_from(1.0, -1.0, -0.0)).data()[0], PI);
    }

    #[test]
    fn zero_scale_is_zero() {
        let ms = scale_from(0.0, 0.0, 0.0);
        let maps = monogenic_maps(&ms);
        assert_eq!(maps.amplitude.data()[0], 0.0);
        assert_eq!(maps.orientation.data()[0], 0.0);
    }

    #[test]
    fn shape_and_input_errors() {
        let g = build_grid_2d(8, 8).unwrap();
        let bank = build_filter_bank(&g, &[LogGabor2DParams::new(4.0, 0.5).unwrap()]).unwrap();
        let wrong = RealImage::zeros(8, 6).unwrap();
        assert!(matches!(
            compute_monogenic(&wrong, &bank),
            Err(Error::ShapeMismatch { .. })
        ));
        let p = LogGabor2DParams::new(4.0, 0.5).unwrap();
        assert!(MonogenicScale::new(
            RealImage::zeros(2, 2).unwrap(),
            RealImage::zeros(2, 2).unwrap(),
            RealImage::zeros(2, 3).unwrap(),
            p
        )
        .is_err());
    }

    #[test]
    fn constant_image_has_no_response() {
        let g = build_grid_2d(16, 12).unwrap();
        let bank = build_filter_bank(&g, &[LogGabor2DParams::new(4.0, 0.5).unwrap()]).unwrap();
        let img = RealImage::from_fn(16, 12, |_, _| 7.5).unwrap();
        let ms = &compute_monogenic(&img, &bank).unwrap()[0];
        for part in [ms.even(), ms.odd1(), ms.odd2()] {
            assert!(part.max_abs() < 1e-9 * 7.5);
        }
    }

    #[test]
    fn model_patch_examples() {
        assert!(local_model_patch(1.0, 0.0, 0.0, 4).is_err());
        assert!(local_model_patch(1.0, 0.0, 0.0, 1).is_err());
        let z = local_model_patch(0.0, 0.3, 1.0, 5).unwrap();
        assert!(z.data().iter().all(|&v| v == 0.0));
        let p = local_model_patch(2.0, 0.0, 0.0, 5).unwrap();
        for y in 0..5 {
            assert_eq!(p.get(y, 2), 2.0);
            assert_eq!(p.get(y, 0), p.get(y, 4));
            assert_eq!(p.get(y, 1), p.get(0, 1));
        }
    }
}
