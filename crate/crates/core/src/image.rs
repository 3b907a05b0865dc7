//! Row-major real and complex rasters.

use crate::error::{Error, Result};
use rustfft::num_complex::Complex64;

/// A real-valued raster stored row-major, `data[y * width + x]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealImage {
    height: usize,
    width: usize,
    data: Vec<f64>,
}

/// A complex-valued raster stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexImage {
    height: usize,
    width: usize,
    data: Vec<Complex64>,
}

fn check_dims(height: usize, width: usize, len: usize) -> Result<()> {
    if height == 0 || width == 0 {
        return Err(Error::InvalidSize(format!(
            "image dimensions must be positive, got {height}x{width}"
        )));
    }
    if height.checked_mul(width) != Some(len) {
        return Err(Error::InvalidSize(format!(
            "{height}x{width} image needs {} samples, got {len}",
            height.saturating_mul(width)
        )));
    }
    Ok(())
}

impl RealImage {
    /// Wraps a row-major buffer. Samples must be finite.
    pub fn new(height: usize, width: usize, data: Vec<f64>) -> Result<Self> {
        check_dims(height, width, data.len())?;
        if let Some(i) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "non-finite pixel at ({}, {})",
                i / width,
                i % width
            )));
        }
        Ok(RealImage { height, width, data })
    }

    pub fn zeros(height: usize, width: usize) -> Result<Self> {
        check_dims(height, width, height.saturating_mul(width))?;
        Ok(RealImage {
            height,
            width,
            data: vec![0.0; height * width],
        })
    }

    /// Builds an image by evaluating `f(y, x)` at every pixel.
    pub fn from_fn(height: usize, width: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut data = Vec::with_capacity(height.saturating_mul(width));
        for y in 0..height {
            for x in 0..width {
                data.push(f(y, x));
            }
        }
        Self::new(height, width, data)
    }

    /// Unchecked constructor for buffers produced inside the crate.
    pub(crate) fn from_raw(height: usize, width: usize, data: Vec<f64>) -> Self {
        debug_assert_eq!(height * width, data.len());
        RealImage { height, width, data }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize) -> f64 {
        self.data[y * self.width + x]
    }

    /// Row `y` as a slice.
    pub fn row(&self, y: usize) -> &[f64] {
        &self.data[y * self.width..(y + 1) * self.width]
    }

    /// Applies `f` pixel-wise, producing a new image of the same shape.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> RealImage {
        RealImage::from_raw(self.height, self.width, self.data.iter().map(|&v| f(v)).collect())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn min_max(&self) -> (f64, f64) {
        self.data
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            })
    }

    /// Reflects the image into a `2H x 2W` raster whose periodic extension
    /// is continuous across the borders.
    pub fn mirror_pad(&self) -> RealImage {
        let (h, w) = (self.height, self.width);
        let mut data = Vec::with_capacity(4 * h * w);
        for y in 0..2 * h {
            let sy = if y < h { y } else { 2 * h - 1 - y };
            for x in 0..2 * w {
                let sx = if x < w { x } else { 2 * w - 1 - x };
                data.push(self.get(sy, sx));
            }
        }
        RealImage::from_raw(2 * h, 2 * w, data)
    }

    /// Top-left `height x width` window.
    pub fn crop(&self, height: usize, width: usize) -> Result<RealImage> {
        if height == 0 || width == 0 || height > self.height || width > self.width {
            return Err(Error::InvalidSize(format!(
                "cannot crop {}x{} image to {height}x{width}",
                self.height, self.width
            )));
        }
        let mut data = Vec::with_capacity(height * width);
        for y in 0..height {
            data.extend_from_slice(&self.row(y)[..width]);
        }
        Ok(RealImage::from_raw(height, width, data))
    }
}

impl ComplexImage {
    pub fn new(height: usize, width: usize, data: Vec<Complex64>) -> Result<Self> {
        check_dims(height, width, data.len())?;
        Ok(ComplexImage { height, width, data })
    }

    pub(crate) fn from_raw(height: usize, width: usize, data: Vec<Complex64>) -> Self {
        debug_assert_eq!(height * width, data.len());
        ComplexImage { height, width, data }
    }

    /// Combines two equally shaped real images as `re + i·im`.
    pub fn from_parts(re: &RealImage, im: &RealImage) -> Result<Self> {
        if re.dims() != im.dims() {
            return Err(Error::ShapeMismatch {
                expected: re.dims(),
                actual: im.dims(),
            });
        }
        let data = re
            .data()
            .iter()
            .zip(im.data())
            .map(|(&a, &b)| Complex64::new(a, b))
            .collect();
        Ok(ComplexImage::from_raw(re.height(), re.width(), data))
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize) -> Complex64 {
        self.data[y * self.width + x]
    }

    pub fn re(&self) -> RealImage {
        RealImage::from_raw(self.height, self.width, self.data.iter().map(|c| c.re).collect())
    }

    pub fn im(&self) -> RealImage {
        RealImage::from_raw(self.height, self.width, self.data.iter().map(|c| c.im).collect())
    }

    pub fn norm(&self) -> RealImage {
        RealImage::from_raw(self.height, self.width, self.data.iter().map(|c| c.norm()).collect())
    }

    /// Argument in `(-π, π]`, `0` where the value is zero.
    pub fn arg(&self) -> RealImage {
        RealImage::from_raw(
            self.height,
            self.width,
            self.data
                .iter()
                .map(|&c| crate::analytic::wrapped_angle(c.im, c.re))
                .collect(),
        )
    }
}
