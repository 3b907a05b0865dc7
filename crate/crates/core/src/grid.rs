//! Discrete frequency coordinates in FFT bin order.
//!
//! Bin `k` of an `n`-point axis carries `2πk/n` for `k < n/2` and
//! `2π(k-n)/n` otherwise, so for even `n` the Nyquist bin `n/2` sits on the
//! negative half at `-π`.
//!
//! The 2D grid also carries unit direction rasters for the Riesz transform.
//! A bin that is its own conjugate partner (DC and, for even sizes, the
//! Nyquist combinations) gets direction `(0, 0)`. Along a Nyquist row or
//! column the Nyquist component has no sign (`-π` and `+π` are the same
//! bin), so it contributes nothing to the direction, which is then
//! normalised from the remaining component. This keeps the direction rasters
//! odd under index negation, which is what makes every odd response real.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Angular frequencies of an `n`-point DFT, in radians/sample.
#[derive(Debug, Clone, PartialEq)]
pub struct FreqAxis1D {
    omega: Vec<f64>,
}

impl FreqAxis1D {
    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }

    pub fn omega(&self) -> &[f64] {
        &self.omega
    }

    /// True for the bin that equals its own negation (`0`, and `n/2` for even `n`).
    pub fn is_self_conjugate(&self, k: usize) -> bool {
        let n = self.omega.len();
        (n - k) % n == k
    }

    /// The signed component used for direction: `ω_k`, or `0` at self-conjugate bins.
    fn signed(&self, k: usize) -> f64 {
        if self.is_self_conjugate(k) {
            0.0
        } else {
            self.omega[k]
        }
    }
}

pub fn build_freq_axis_1d(n: usize) -> Result<FreqAxis1D> {
    if n == 0 {
        return Err(Error::InvalidSize("frequency axis needs at least one sample".into()));
    }
    let omega = (0..n)
        .map(|k| {
            if 2 * k < n {
                2.0 * PI * (k as f64 / n as f64)
            } else {
                2.0 * PI * ((k as f64 - n as f64) / n as f64)
            }
        })
        .collect();
    Ok(FreqAxis1D { omega })
}

/// Radial frequency and unit direction for every bin of an `H x W` DFT.
///
/// Immutable once built; cheap to share between threads.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyGrid2D {
    height: usize,
    width: usize,
    omega_y: FreqAxis1D,
    omega_x: FreqAxis1D,
    radius: Vec<f64>,
    dir_x: Vec<f64>,
    dir_y: Vec<f64>,
    self_conjugate: Vec<bool>,
}

impl FrequencyGrid2D {
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn len(&self) -> usize {
        self.radius.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radius.is_empty()
    }

    /// Vertical frequency axis (indexed by row).
    pub fn omega_y(&self) -> &FreqAxis1D {
        &self.omega_y
    }

    /// Horizontal frequency axis (indexed by column).
    pub fn omega_x(&self) -> &FreqAxis1D {
        &self.omega_x
    }

    /// `‖ω‖` per bin, row-major.
    pub fn radius(&self) -> &[f64] {
        &self.radius
    }

    pub fn dir_x(&self) -> &[f64] {
        &self.dir_x
    }

    pub fn dir_y(&self) -> &[f64] {
        &self.dir_y
    }

    pub fn self_conjugate_mask(&self) -> &[bool] {
        &self.self_conjugate
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.width + j
    }
}

pub fn build_grid_2d(height: usize, width: usize) -> Result<FrequencyGrid2D> {
    if height == 0 || width == 0 {
        return Err(Error::InvalidSize(format!(
            "grid dimensions must be positive, got {height}x{width}"
        )));
    }
    let omega_y = build_freq_axis_1d(height)?;
    let omega_x = build_freq_axis_1d(width)?;
    let n = height * width;
    let mut radius = Vec::with_capacity(n);
    let mut dir_x = Vec::with_capacity(n);
    let mut dir_y = Vec::with_capacity(n);
    let mut self_conjugate = Vec::with_capacity(n);

    for i in 0..height {
        let wy = omega_y.omega[i];
        let sy = omega_y.signed(i);
        for j in 0..width {
            let wx = omega_x.omega[j];
            let sx = omega_x.signed(j);
            radius.push(wx.hypot(wy));
            let masked = omega_y.is_self_conjugate(i) && omega_x.is_self_conjugate(j);
            self_conjugate.push(masked);
            if masked {
                dir_x.push(0.0);
                dir_y.push(0.0);
            } else {
                let r = sx.hypot(sy);
                dir_x.push(sx / r);
                dir_y.push(sy / r);
            }
        }
    }

    Ok(FrequencyGrid2D {
        height,
        width,
        omega_y,
        omega_x,
        radius,
        dir_x,
        dir_y,
        self_conjugate,
    })
}
