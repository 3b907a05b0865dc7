//! Frequency-domain spherical quadrature filters.
//!
//! The even filter is a radial log-Gabor. Its odd partners come from the
//! Riesz multipliers `M1 = i·ωx/‖ω‖`, `M2 = i·ωy/‖ω‖`, packed into a single
//! complex odd filter `G_oc = G_o1 + i·G_o2 = (i·dir_x - dir_y)·G_e` so that
//! one complex inverse transform yields both odd parts.

use crate::analytic::{log_gabor_gain, validate_log_gabor};
use crate::error::{Error, Result};
use crate::grid::{build_grid_2d, FrequencyGrid2D};
use crate::image::{ComplexImage, RealImage};
use rayon::prelude::*;
use rustfft::num_complex::Complex64;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex};

/// Radial log-Gabor parameters: centre wavelength in pixels/cycle and shape.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogGabor2DParams {
    center_wavelength: f64,
    sigma0: f64,
}

impl LogGabor2DParams {
    pub fn new(center_wavelength: f64, sigma0: f64) -> Result<Self> {
        validate_log_gabor(center_wavelength, sigma0)?;
        Ok(LogGabor2DParams {
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

    pub fn omega0(&self) -> f64 {
        2.0 * PI / self.center_wavelength
    }

    fn key(&self) -> (u64, u64) {
        (self.center_wavelength.to_bits(), self.sigma0.to_bits())
    }
}

/// Even log-Gabor filter over `grid`, in FFT bin order.
pub fn radial_log_gabor_2d(grid: &FrequencyGrid2D, p: &LogGabor2DParams) -> RealImage {
    let omega0 = p.omega0();
    let data = grid
        .radius()
        .iter()
        .map(|&r| log_gabor_gain(r, omega0, p.sigma0))
        .collect();
    RealImage::from_raw(grid.height(), grid.width(), data)
}

/// Riesz multipliers `(i·dir_x, i·dir_y)`; zero at self-conjugate bins.
pub fn riesz_multipliers(grid: &FrequencyGrid2D) -> (ComplexImage, ComplexImage) {
    let m1 = grid.dir_x().iter().map(|&d| Complex64::new(0.0, d)).collect();
    let m2 = grid.dir_y().iter().map(|&d| Complex64::new(0.0, d)).collect();
    (
        ComplexImage::from_raw(grid.height(), grid.width(), m1),
        ComplexImage::from_raw(grid.height(), grid.width(), m2),
    )
}

/// Complex odd filter `(i·dir_x - dir_y)·G_e`.
pub fn complex_odd_filter(grid: &FrequencyGrid2D, even: &RealImage) -> Result<ComplexImage> {
    if even.dims() != grid.dims() {
        return Err(Error::ShapeMismatch {
            expected: grid.dims(),
            actual: even.dims(),
        });
    }
    let data = grid
        .dir_x()
        .iter()
        .zip(grid.dir_y())
        .zip(even.data())
        .map(|((&dx, &dy), &g)| Complex64::new(-dy * g, dx * g))
        .collect();
    Ok(ComplexImage::from_raw(grid.height(), grid.width(), data))
}

/// Even and complex-odd filters for a list of scales over one grid.
#[derive(Debug, Clone)]
pub struct FilterBank {
    grid: Arc<FrequencyGrid2D>,
    scales: Vec<LogGabor2DParams>,
    even: Vec<RealImage>,
    odd_complex: Vec<ComplexImage>,
}

impl FilterBank {
    pub fn grid(&self) -> &FrequencyGrid2D {
        &self.grid
    }

    pub fn dims(&self) -> (usize, usize) {
        self.grid.dims()
    }

    pub fn scales(&self) -> &[LogGabor2DParams] {
        &self.scales
    }

    pub fn len(&self) -> usize {
        self.scales.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scales.is_empty()
    }

    pub fn even(&self, scale: usize) -> &RealImage {
        &self.even[scale]
    }

    pub fn odd_complex(&self, scale: usize) -> &ComplexImage {
        &self.odd_complex[scale]
    }
}

pub fn build_filter_bank(grid: &FrequencyGrid2D, scales: &[LogGabor2DParams]) -> Result<FilterBank> {
    build_filter_bank_shared(Arc::new(grid.clone()), scales)
}

fn build_filter_bank_shared(grid: Arc<FrequencyGrid2D>, scales: &[LogGabor2DParams]) -> Result<FilterBank> {
    if scales.is_empty() {
        return Err(Error::InvalidInput("filter bank needs at least one scale".into()));
    }
    let (even, odd_complex): (Vec<_>, Vec<_>) = scales
        .par_iter()
        .map(|p| {
            let even = radial_log_gabor_2d(&grid, p);
            let odd = complex_odd_filter(&grid, &even)?;
            Ok((even, odd))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .unzip();
    Ok(FilterBank {
        grid,
        scales: scales.to_vec(),
        even,
        odd_complex,
    })
}

type BankKey = (usize, usize, Vec<(u64, u64)>);

/// Memoises filter banks by `(height, width, scales)`.
#[derive(Debug, Default)]
pub struct FilterBankCache {
    banks: Mutex<HashMap<BankKey, Arc<FilterBank>>>,
}

impl FilterBankCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get_or_build(&self, height: usize, width: usize, scales: &[LogGabor2DParams]) -> Result<Arc<FilterBank>> {
        let key = (
            height,
            width,
            scales.iter().map(LogGabor2DParams::key).collect::<Vec<_>>(),
        );
        if let Some(bank) = self.banks.lock().unwrap().get(&key) {
            return Ok(Arc::clone(bank));
        }
        let bank = Arc::new(build_filter_bank_shared(
            Arc::new(build_grid_2d(height, width)?),
            scales,
        )?);
        Ok(Arc::clone(self.banks.lock().unwrap().entry(key).or_insert(bank)))
    }

    pub fn len(&self) -> usize {
        self.banks.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
