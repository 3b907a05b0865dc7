//! Python bindings for `monoline`.
//!
//! Images cross the boundary as lists of rows (`list[list[float]]`), signals
//! as flat lists. Complex results come back as Python `complex`.

use monoline::{Complex64, Error, FeatureParams, LogGabor1DParams, LogGabor2DParams, RealImage, Signal1D};
use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Io { .. } => PyIOError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

pub fn rows_to_image(rows: Vec<Vec<f64>>) -> Result<RealImage, Error> {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    if let Some(bad) = rows.iter().position(|r| r.len() != width) {
        return Err(Error::InvalidInput(format!(
            "row {bad} has {} values, expected {width}",
            rows[bad].len()
        )));
    }
    RealImage::new(height, width, rows.concat())
}

pub fn image_to_rows(img: &RealImage) -> Vec<Vec<f64>> {
    (0..img.height()).map(|y| img.row(y).to_vec()).collect()
}

fn complex_rows(img: &monoline::ComplexImage) -> Vec<Vec<Complex64>> {
    img.data().chunks(img.width()).map(<[Complex64]>::to_vec).collect()
}

fn signal(samples: Vec<f64>) -> PyResult<Signal1D> {
    Signal1D::new(samples).map_err(to_py_err)
}

fn feature_params(threshold: f64, epsilon: f64) -> PyResult<FeatureParams> {
    FeatureParams::new(threshold, epsilon).map_err(to_py_err)
}

/// Analytic signal `f + i·H{f}`.
#[pyfunction]
fn analytic_signal(samples: Vec<f64>) -> PyResult<Vec<Complex64>> {
    let fa = monoline::analytic_signal(&signal(samples)?).map_err(to_py_err)?;
    Ok(fa.samples().to_vec())
}

#[pyfunction]
fn hilbert_transform(samples: Vec<f64>) -> PyResult<Vec<f64>> {
    let h = monoline::hilbert_transform(&signal(samples)?).map_err(to_py_err)?;
    Ok(h.into_samples())
}

/// Log-Gabor filtered analytic signal at centre wavelength `wavelength`.
#[pyfunction]
#[pyo3(signature = (samples, wavelength, sigma0 = 0.5))]
fn filtered_analytic(samples: Vec<f64>, wavelength: f64, sigma0: f64) -> PyResult<Vec<Complex64>> {
    let p = LogGabor1DParams::new(wavelength, sigma0).map_err(to_py_err)?;
    let fa = monoline::filtered_analytic_1d(&signal(samples)?, &p).map_err(to_py_err)?;
    Ok(fa.samples().to_vec())
}

/// `(amplitude, phase)` of a complex sequence.
#[pyfunction]
fn local_phase_amplitude(analytic: Vec<Complex64>) -> (Vec<f64>, Vec<f64>) {
    monoline::local_phase_amplitude_1d(&monoline::AnalyticSignal1D::from_samples(analytic))
}

#[pyfunction]
#[pyo3(signature = (samples, wavelengths, sigma0 = 0.6))]
fn scaleogram(samples: Vec<f64>, wavelengths: Vec<f64>, sigma0: f64) -> PyResult<Vec<Vec<f64>>> {
    let s = monoline::scaleogram(&signal(samples)?, &wavelengths, sigma0).map_err(to_py_err)?;
    Ok(image_to_rows(&s))
}

/// One scale of the monogenic signal.
#[pyclass(name = "MonogenicScale", module = "monoline")]
pub struct PyMonogenicScale {
    inner: monoline::MonogenicScale,
}

#[pymethods]
impl PyMonogenicScale {
    #[getter]
    fn wavelength(&self) -> f64 {
        self.inner.params().center_wavelength()
    }

    #[getter]
    fn sigma0(&self) -> f64 {
        self.inner.params().sigma0()
    }

    #[getter]
    fn even(&self) -> Vec<Vec<f64>> {
        image_to_rows(self.inner.even())
    }

    #[getter]
    fn odd1(&self) -> Vec<Vec<f64>> {
        image_to_rows(self.inner.odd1())
    }

    #[getter]
    fn odd2(&self) -> Vec<Vec<f64>> {
        image_to_rows(self.inner.odd2())
    }

    fn amplitude(&self) -> Vec<Vec<f64>> {
        image_to_rows(&monoline::local_amplitude(&self.inner))
    }

    fn phase(&self) -> Vec<Vec<f64>> {
        image_to_rows(&monoline::local_phase(&self.inner))
    }

    fn orientation(&self) -> Vec<Vec<f64>> {
        image_to_rows(&monoline::local_orientation(&self.inner))
    }

    fn odd_magnitude(&self) -> Vec<Vec<f64>> {
        image_to_rows(&monoline::combined_odd(&self.inner))
    }

    #[pyo3(signature = (threshold = 0.18, epsilon = 1e-3))]
    fn symmetry(&self, threshold: f64, epsilon: f64) -> PyResult<Vec<Vec<f64>>> {
        let m = monoline::feature_symmetry(&self.inner, &feature_params(threshold, epsilon)?);
        Ok(image_to_rows(m.real().expect("real map")))
    }

    #[pyo3(signature = (threshold = 0.18, epsilon = 1e-3))]
    fn asymmetry(&self, threshold: f64, epsilon: f64) -> PyResult<Vec<Vec<f64>>> {
        let m = monoline::feature_asymmetry(&self.inner, &feature_params(threshold, epsilon)?);
        Ok(image_to_rows(m.real().expect("real map")))
    }

    #[pyo3(signature = (threshold = 0.18, epsilon = 1e-3))]
    fn signed_symmetry(&self, threshold: f64, epsilon: f64) -> PyResult<Vec<Vec<f64>>> {
        let m = monoline::signed_symmetry(&self.inner, &feature_params(threshold, epsilon)?);
        Ok(image_to_rows(m.real().expect("real map")))
    }

    #[pyo3(signature = (threshold = 0.18, epsilon = 1e-3))]
    fn oriented_asymmetry(&self, threshold: f64, epsilon: f64) -> PyResult<Vec<Vec<Complex64>>> {
        let m = monoline::oriented_asymmetry(&self.inner, &feature_params(threshold, epsilon)?);
        Ok(complex_rows(m.complex().expect("complex map")))
    }

    fn __repr__(&self) -> String {
        let (h, w) = self.inner.dims();
        format!(
            "MonogenicScale(wavelength={}, sigma0={}, shape=({h}, {w}))",
            self.wavelength(),
            self.sigma0()
        )
    }
}

/// Monogenic signal of `image` at each centre wavelength.
#[pyfunction]
#[pyo3(signature = (image, wavelengths, sigma0 = 0.5))]
fn monogenic(image: Vec<Vec<f64>>, wavelengths: Vec<f64>, sigma0: f64) -> PyResult<Vec<PyMonogenicScale>> {
    let img = rows_to_image(image).map_err(to_py_err)?;
    let scales = wavelengths
        .iter()
        .map(|&l| LogGabor2DParams::new(l, sigma0))
        .collect::<Result<Vec<_>, _>>()
        .map_err(to_py_err)?;
    let grid = monoline::build_grid_2d(img.height(), img.width()).map_err(to_py_err)?;
    let bank = monoline::build_filter_bank(&grid, &scales).map_err(to_py_err)?;
    let out = monoline::compute_monogenic(&img, &bank).map_err(to_py_err)?;
    Ok(out.into_iter().map(|inner| PyMonogenicScale { inner }).collect())
}

fn collect_scales(scales: &[PyRef<'_, PyMonogenicScale>]) -> Vec<monoline::MonogenicScale> {
    scales.iter().map(|s| s.inner.clone()).collect()
}

#[pyfunction]
#[pyo3(signature = (scales, threshold = 0.18, epsilon = 1e-3))]
fn multiscale_symmetry(
    scales: Vec<PyRef<'_, PyMonogenicScale>>,
    threshold: f64,
    epsilon: f64,
) -> PyResult<Vec<Vec<f64>>> {
    let m = monoline::multiscale_symmetry(&collect_scales(&scales), &feature_params(threshold, epsilon)?)
        .map_err(to_py_err)?;
    Ok(image_to_rows(m.real().expect("real map")))
}

#[pyfunction]
#[pyo3(signature = (scales, threshold = 0.18, epsilon = 1e-3))]
fn multiscale_asymmetry(
    scales: Vec<PyRef<'_, PyMonogenicScale>>,
    threshold: f64,
    epsilon: f64,
) -> PyResult<Vec<Vec<f64>>> {
    let m = monoline::multiscale_asymmetry(&collect_scales(&scales), &feature_params(threshold, epsilon)?)
        .map_err(to_py_err)?;
    Ok(image_to_rows(m.real().expect("real map")))
}

/// Reads a P2/P5 graymap normalised to `[0, 1]`.
#[pyfunction]
fn read_pgm(path: std::path::PathBuf) -> PyResult<Vec<Vec<f64>>> {
    Ok(image_to_rows(&monoline::io::read_pgm(path).map_err(to_py_err)?))
}

#[pyfunction]
#[pyo3(signature = (image, path, lo = 0.0, hi = 1.0))]
fn write_pgm(image: Vec<Vec<f64>>, path: std::path::PathBuf, lo: f64, hi: f64) -> PyResult<()> {
    let img = rows_to_image(image).map_err(to_py_err)?;
    monoline::io::write_pgm(&img, path, (lo, hi)).map_err(to_py_err)
}

#[pymodule]
#[pyo3(name = "monoline")]
fn monoline_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMonogenicScale>()?;
    m.add_function(wrap_pyfunction!(analytic_signal, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_transform, m)?)?;
    m.add_function(wrap_pyfunction!(filtered_analytic, m)?)?;
    m.add_function(wrap_pyfunction!(local_phase_amplitude, m)?)?;
    m.add_function(wrap_pyfunction!(scaleogram, m)?)?;
    m.add_function(wrap_pyfunction!(monogenic, m)?)?;
    m.add_function(wrap_pyfunction!(multiscale_symmetry, m)?)?;
    m.add_function(wrap_pyfunction!(multiscale_asymmetry, m)?)?;
    m.add_function(wrap_pyfunction!(read_pgm, m)?)?;
    m.add_function(wrap_pyfunction!(write_pgm, m)?)?;
    Ok(())
}
