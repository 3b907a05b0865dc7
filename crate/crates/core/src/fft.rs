//! Thin wrappers over `rustfft` for 1D sequences and row-major 2D rasters.
//!
//! Forward transforms are unnormalised (`X[k] = Σ x[n] e^{-2πikn/N}`); inverse
//! transforms carry the full `1/N` factor so that `ifft(fft(x)) == x`.

use rustfft::num_complex::Complex64;
use rustfft::{FftDirection, FftPlanner};

pub fn fft(data: &mut [Complex64]) {
    transform_1d(data, FftDirection::Forward);
}

pub fn ifft(data: &mut [Complex64]) {
    transform_1d(data, FftDirection::Inverse);
    let scale = 1.0 / data.len() as f64;
    data.iter_mut().for_each(|v| *v *= scale);
}

fn transform_1d(data: &mut [Complex64], direction: FftDirection) {
    if data.is_empty() {
        return;
    }
    let plan = FftPlanner::new().plan_fft(data.len(), direction);
    plan.process(data);
}

/// Forward 2D transform of a `height x width` row-major buffer, in place.
pub fn fft2(height: usize, width: usize, data: &mut [Complex64]) {
    transform_2d(height, width, data, FftDirection::Forward);
}

/// Inverse 2D transform (normalised by `1 / (height * width)`), in place.
pub fn ifft2(height: usize, width: usize, data: &mut [Complex64]) {
    transform_2d(height, width, data, FftDirection::Inverse);
    let scale = 1.0 / (height * width) as f64;
    data.iter_mut().for_each(|v| *v *= scale);
}

fn transform_2d(height: usize, width: usize, data: &mut [Complex64], direction: FftDirection) {
    assert_eq!(data.len(), height * width, "buffer does not match dimensions");
    if data.is_empty() {
        return;
    }
    let mut planner = FftPlanner::new();

    let row_plan = planner.plan_fft(width, direction);
    let mut scratch = vec![Complex64::default(); row_plan.get_inplace_scratch_len()];
    for row in data.chunks_exact_mut(width) {
        row_plan.process_with_scratch(row, &mut scratch);
    }

    // Columns: gather into a contiguous buffer, transform, scatter back.
    let col_plan = planner.plan_fft(height, direction);
    scratch.resize(col_plan.get_inplace_scratch_len(), Complex64::default());
    let mut column = vec![Complex64::default(); height];
    for x in 0..width {
        for (y, c) in column.iter_mut().enumerate() {
            *c = data[y * width + x];
        }
        col_plan.process_with_scratch(&mut column, &mut scratch);
        for (y, c) in column.iter().enumerate() {
            data[y * width + x] = *c;
        }
    }
}

/// Forward 2D transform of a real raster.
pub fn fft2_real(height: usize, width: usize, data: &[f64]) -> Vec<Complex64> {
    let mut buf: Vec<Complex64> = data.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft2(height, width, &mut buf);
    buf
}
