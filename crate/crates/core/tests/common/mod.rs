//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls into the library's transform or filter code: spectra
//! come from explicit O(N²) DFT sums and multipliers are rebuilt from bin
//! indices.

#![allow(dead_code)]

use monoline::{Complex64, RealImage};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_vec(rng: &mut StdRng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(-1.0..1.0)).collect()
}

pub fn random_image(rng: &mut StdRng, h: usize, w: usize) -> RealImage {
    RealImage::new(h, w, (0..h * w).map(|_| rng.random_range(0.0..1.0)).collect()).unwrap()
}

/// Explicit DFT, `sign = -1` forward, `+1` inverse (unnormalised).
pub fn dft(x: &[Complex64], sign: f64) -> Vec<Complex64> {
    let n = x.len();
    (0..n)
        .map(|k| {
            x.iter()
                .enumerate()
                .map(|(t, &v)| v * Complex64::from_polar(1.0, sign * 2.0 * PI * ((k * t) % n) as f64 / n as f64))
                .sum()
        })
        .collect()
}

pub fn dft_real(x: &[f64]) -> Vec<Complex64> {
    dft(&x.iter().map(|&v| Complex64::new(v, 0.0)).collect::<Vec<_>>(), -1.0)
}

pub fn idft(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len() as f64;
    dft(x, 1.0).into_iter().map(|v| v / n).collect()
}

/// Signed bin index in `(-n/2, n/2]` with the even-n Nyquist reported as `n/2`.
pub fn signed_bin(k: usize, n: usize) -> i64 {
    if 2 * k <= n {
        k as i64
    } else {
        k as i64 - n as i64
    }
}

/// `m(ω)` of the analytic signal: 2 on positive, 0 on negative, 1 at DC/Nyquist.
pub fn analytic_oracle(x: &[f64]) -> Vec<Complex64> {
    let n = x.len();
    let spec = dft_real(x);
    let filtered: Vec<Complex64> = spec
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let s = signed_bin(k, n);
            let m = if s == 0 || 2 * k == n {
                1.0
            } else if s > 0 {
                2.0
            } else {
                0.0
            };
            v * m
        })
        .collect();
    idft(&filtered)
}

/// Explicit 2D DFT of a row-major buffer.
pub fn dft2(h: usize, w: usize, x: &[Complex64], sign: f64) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); h * w];
    for ky in 0..h {
        for kx in 0..w {
            let mut acc = Complex64::new(0.0, 0.0);
            for y in 0..h {
                for xx in 0..w {
                    let phase = ((ky * y) % h) as f64 / h as f64 + ((kx * xx) % w) as f64 / w as f64;
                    acc += x[y * w + xx] * Complex64::from_polar(1.0, sign * 2.0 * PI * phase);
                }
            }
            out[ky * w + kx] = acc;
        }
    }
    out
}

/// Log-Gabor gain written out directly.
pub fn log_gabor(radius: f64, wavelength: f64, sigma0: f64) -> f64 {
    if radius == 0.0 {
        return 0.0;
    }
    let omega0 = 2.0 * PI / wavelength;
    (-(radius / omega0).ln().powi(2) / (2.0 * sigma0.ln().powi(2))).exp()
}

/// Brute-force monogenic triple: explicit 2D DFT, multipliers rebuilt from
/// bin indices, three explicit inverse DFTs. Returns `(even, odd1, odd2, max
/// imaginary residue)`.
pub fn monogenic_oracle(img: &RealImage, wavelength: f64, sigma0: f64) -> (Vec<f64>, Vec<f64>, Vec<f64>, f64) {
    let (h, w) = img.dims();
    let x: Vec<Complex64> = img.data().iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let spec = dft2(h, w, &x, -1.0);
    let mut even = vec![Complex64::new(0.0, 0.0); h * w];
    let mut odd1 = even.clone();
    let mut odd2 = even.clone();
    for ky in 0..h {
        for kx in 0..w {
            let (sy, sx) = (signed_bin(ky, h), signed_bin(kx, w));
            let wy = 2.0 * PI * sy as f64 / h as f64;
            let wx = 2.0 * PI * sx as f64 / w as f64;
            let g = log_gabor(wx.hypot(wy), wavelength, sigma0);
            // A Nyquist component has no sign and does not contribute to direction.
            let dy = if 2 * ky == h || ky == 0 { 0.0 } else { wy };
            let dx = if 2 * kx == w || kx == 0 { 0.0 } else { wx };
            let r = dx.hypot(dy);
            let (ux, uy) = if r == 0.0 { (0.0, 0.0) } else { (dx / r, dy / r) };
            let b = ky * w + kx;
            even[b] = spec[b] * g;
            odd1[b] = spec[b] * Complex64::new(0.0, ux * g);
            odd2[b] = spec[b] * Complex64::new(0.0, uy * g);
        }
    }
    let inv =
        |v: &[Complex64]| -> Vec<Complex64> { dft2(h, w, v, 1.0).into_iter().map(|c| c / (h * w) as f64).collect() };
    let (e, o1, o2) = (inv(&even), inv(&odd1), inv(&odd2));
    let residue = e.iter().chain(&o1).chain(&o2).fold(0.0f64, |m, c| m.max(c.im.abs()));
    let re = |v: Vec<Complex64>| v.into_iter().map(|c| c.re).collect();
    (re(e), re(o1), re(o2), residue)
}

/// Rotates a square image by +90° about the periodic origin:
/// `g(x, y) = f(y, -x)`, i.e. `g[y][x] = f[(-x) mod N][y]`.
pub fn rotate90(img: &RealImage) -> RealImage {
    let n = img.height();
    assert_eq!(n, img.width());
    RealImage::from_fn(n, n, |y, x| img.get((n - x) % n, y)).unwrap()
}

/// Source pixel of `rotate90` output pixel `(y, x)`.
pub fn rotate90_source(n: usize, y: usize, x: usize) -> (usize, usize) {
    ((n - x) % n, y)
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
}

pub fn max_abs(a: &[f64]) -> f64 {
    a.iter().fold(0.0f64, |m, v| m.max(v.abs()))
}

/// Difference of two angles folded into `(-π, π]`.
pub fn angle_diff(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    if d > PI {
        d - 2.0 * PI
    } else {
        d
    }
}

/// Pearson correlation.
pub fn correlation(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        sab += (x - ma) * (y - mb);
        saa += (x - ma) * (x - ma);
        sbb += (y - mb) * (y - mb);
    }
    sab / (saa * sbb).sqrt()
}

/// Band-limited smooth test image: a few random sinusoids plus a blob.
pub fn smooth_image(rng: &mut StdRng, n: usize) -> RealImage {
    let comps: Vec<(f64, f64, f64, f64)> = (0..6)
        .map(|_| {
            (
                rng.random_range(1..6) as f64,
                rng.random_range(-5..6) as f64,
                rng.random_range(0.0..2.0 * PI),
                rng.random_range(0.2..1.0),
            )
        })
        .collect();
    RealImage::from_fn(n, n, |y, x| {
        comps
            .iter()
            .map(|&(kx, ky, ph, a)| a * (2.0 * PI * (kx * x as f64 + ky * y as f64) / n as f64 + ph).cos())
            .sum()
    })
    .unwrap()
}

/// Synthetic stand-in for a natural photograph: a gradient backdrop, a bright
/// disc, a dark rectangle, a diagonal bar and some deterministic texture.
pub fn cameraman_like(n: usize) -> RealImage {
    let c = n as f64 / 2.0;
    RealImage::from_fn(n, n, |y, x| {
        let (xf, yf) = (x as f64, y as f64);
        let mut v = 0.25 + 0.3 * yf / n as f64;
        if (xf - 0.35 * n as f64).hypot(yf - 0.35 * n as f64) < 0.15 * n as f64 {
            v = 0.9;
        }
        if xf > 0.55 * n as f64 && xf < 0.85 * n as f64 && yf > 0.55 * n as f64 && yf < 0.8 * n as f64 {
            v = 0.05;
        }
        if ((xf - c) - (yf - c)).abs() < 3.0 && xf < 0.5 * n as f64 {
            v = 0.7;
        }
        v += 0.03 * ((0.9 * xf).sin() * (1.3 * yf).cos());
        v.clamp(0.0, 1.0)
    })
    .unwrap()
}

/// Writes an 8-bit binary PGM without going through the library encoder.
pub fn write_test_pgm(path: &std::path::Path, img: &RealImage) {
    let mut bytes = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    bytes.extend(img.data().iter().map(|&v| (v.clamp(0.0, 1.0) * 255.0).round() as u8));
    std::fs::write(path, bytes).unwrap();
}
