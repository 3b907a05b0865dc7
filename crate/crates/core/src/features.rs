//! Phase-based feature measures.
//!
//! Feature symmetry `S` responds to blob-like (even-dominant) structure and
//! feature asymmetry `R` to edge-like (odd-dominant) structure:
//!
//! ```text
//! S = max(0, |f_e| - f_o - T) / (A + ε)
//! R = max(0, f_o - |f_e| - T) / (A + ε)
//! ```
//!
//! The signed symmetry keeps the sign of `f_e` (peak vs trough) and the
//! oriented asymmetry multiplies `R` by the unit vector of the complex odd
//! response. Multiscale variants are plain sums over scales.

use crate::error::{Error, Result};
use crate::image::{ComplexImage, RealImage};
use crate::monogenic::MonogenicScale;
use rustfft::num_complex::Complex64;

/// Threshold `T` (normalised intensity units) and stabiliser `ε`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeatureParams {
    threshold: f64,
    epsilon: f64,
}

impl FeatureParams {
    pub const DEFAULT_THRESHOLD: f64 = 0.18;
    pub const DEFAULT_EPSILON: f64 = 1e-3;

    pub fn new(threshold: f64, epsilon: f64) -> Result<Self> {
        if !(threshold.is_finite() && threshold >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "threshold must be >= 0, got {threshold}"
            )));
        }
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(Error::InvalidParameter(format!("epsilon must be > 0, got {epsilon}")));
        }
        Ok(FeatureParams { threshold, epsilon })
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

impl Default for FeatureParams {
    fn default() -> Self {
        FeatureParams {
            threshold: Self::DEFAULT_THRESHOLD,
            epsilon: Self::DEFAULT_EPSILON,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FeatureKind {
    Symmetry,
    Asymmetry,
    SignedSymmetry,
    OrientedAsymmetry,
    MultiscaleSymmetry,
    MultiscaleAsymmetry,
    MultiscaleSignedSymmetry,
    MultiscaleOrientedAsymmetry,
}

impl FeatureKind {
    pub fn is_complex(self) -> bool {
        matches!(
            self,
            FeatureKind::OrientedAsymmetry | FeatureKind::MultiscaleOrientedAsymmetry
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FeatureData {
    Real(RealImage),
    Complex(ComplexImage),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeatureMap {
    pub kind: FeatureKind,
    pub data: FeatureData,
}

impl FeatureMap {
    /// The real raster, or `None` for oriented asymmetry.
    pub fn real(&self) -> Option<&RealImage> {
        match &self.data {
            FeatureData::Real(r) => Some(r),
            FeatureData::Complex(_) => None,
        }
    }

    pub fn complex(&self) -> Option<&ComplexImage> {
        match &self.data {
            FeatureData::Complex(c) => Some(c),
            FeatureData::Real(_) => None,
        }
    }

    /// Pointwise magnitude (`|value|`) for either representation.
    pub fn magnitude(&self) -> RealImage {
        match &self.data {
            FeatureData::Real(r) => r.map(f64::abs),
            FeatureData::Complex(c) => c.norm(),
        }
    }
}

struct Terms {
    sym: f64,
    asym: f64,
    even: f64,
    odd: Complex64,
}

#[inline]
fn terms(e: f64, o1: f64, o2: f64, p: &FeatureParams) -> Terms {
    let fo = o1.hypot(o2);
    let amp = (e * e + o1 * o1 + o2 * o2).sqrt();
    let denom = amp + p.epsilon;
    let fe = e.abs();
    Terms {
        sym: (fe - fo - p.threshold).max(0.0) / denom,
        asym: (fo - fe - p.threshold).max(0.0) / denom,
        even: e,
        odd: Complex64::new(o1, o2),
    }
}

fn sign(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

fn unit(c: Complex64) -> Complex64 {
    let n = c.norm();
    if n == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        c / n
    }
}

fn real_map(ms: &MonogenicScale, kind: FeatureKind, p: &FeatureParams, f: impl Fn(Terms) -> f64) -> FeatureMap {
    let (h, w) = ms.dims();
    let data = ms.triples().map(|(e, o1, o2)| f(terms(e, o1, o2, p))).collect();
    FeatureMap {
        kind,
        data: FeatureData::Real(RealImage::from_raw(h, w, data)),
    }
}

pub fn feature_symmetry(ms: &MonogenicScale, p: &FeatureParams) -> FeatureMap {
    real_map(ms, FeatureKind::Symmetry, p, |t| t.sym)
}

pub fn feature_asymmetry(ms: &MonogenicScale, p: &FeatureParams) -> FeatureMap {
    real_map(ms, FeatureKind::Asymmetry, p, |t| t.asym)
}

/// `S·sgn(f_e)` with `sgn(0) = 0`; lies in `(-1, 1)`.
pub fn signed_symmetry(ms: &MonogenicScale, p: &FeatureParams) -> FeatureMap {
    real_map(ms, FeatureKind::SignedSymmetry, p, |t| t.sym * sign(t.even))
}

/// `R·f_oc/|f_oc|`, zero where the odd response vanishes.
pub fn oriented_asymmetry(ms: &MonogenicScale, p: &FeatureParams) -> FeatureMap {
    let (h, w) = ms.dims();
    let data = ms
        .triples()
        .map(|(e, o1, o2)| {
            let t = terms(e, o1, o2, p);
            unit(t.odd) * t.asym
        })
        .collect();
    FeatureMap {
        kind: FeatureKind::OrientedAsymmetry,
        data: FeatureData::Complex(ComplexImage::from_raw(h, w, data)),
    }
}

fn check_scales(scales: &[MonogenicScale]) -> Result<(usize, usize)> {
    let first = scales
        .first()
        .ok_or_else(|| Error::InvalidInput("multiscale measure needs at least one scale".into()))?;
    let dims = first.dims();
    if let Some(bad) = scales.iter().find(|s| s.dims() != dims) {
        return Err(Error::ShapeMismatch {
            expected: dims,
            actual: bad.dims(),
        });
    }
    Ok(dims)
}

fn accumulate_real(
    scales: &[MonogenicScale],
    kind: FeatureKind,
    p: &FeatureParams,
    f: impl Fn(Terms) -> f64,
) -> Result<FeatureMap> {
    let (h, w) = check_scales(scales)?;
    let mut acc = vec![0.0; h * w];
    for ms in scales {
        for (a, (e, o1, o2)) in acc.iter_mut().zip(ms.triples()) {
            *a += f(terms(e, o1, o2, p));
        }
    }
    Ok(FeatureMap {
        kind,
        data: FeatureData::Real(RealImage::from_raw(h, w, acc)),
    })
}

/// Sum of per-scale symmetry. Not normalised: values may exceed 1.
pub fn multiscale_symmetry(scales: &[MonogenicScale], p: &FeatureParams) -> Result<FeatureMap> {
    accumulate_real(scales, FeatureKind::MultiscaleSymmetry, p, |t| t.sym)
}

/// Sum of per-scale asymmetry. Not normalised: values may exceed 1.
pub fn multiscale_asymmetry(scales: &[MonogenicScale], p: &FeatureParams) -> Result<FeatureMap> {
    accumulate_real(scales, FeatureKind::MultiscaleAsymmetry, p, |t| t.asym)
}

pub fn multiscale_signed_symmetry(scales: &[MonogenicScale], p: &FeatureParams) -> Result<FeatureMap> {
    accumulate_real(scales, FeatureKind::MultiscaleSignedSymmetry, p, |t| {
        t.sym * sign(t.even)
    })
}

pub fn multiscale_oriented_asymmetry(scales: &[MonogenicScale], p: &FeatureParams) -> Result<FeatureMap> {
    let (h, w) = check_scales(scales)?;
    let mut acc = vec![Complex64::new(0.0, 0.0); h * w];
    for ms in scales {
        for (a, (e, o1, o2)) in acc.iter_mut().zip(ms.triples()) {
            let t = terms(e, o1, o2, p);
            *a += unit(t.odd) * t.asym;
        }
    }
    Ok(FeatureMap {
        kind: FeatureKind::MultiscaleOrientedAsymmetry,
        data: FeatureData::Complex(ComplexImage::from_raw(h, w, acc)),
    })
}
