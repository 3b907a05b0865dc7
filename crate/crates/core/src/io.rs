//! PGM/PPM rasters and single-column CSV signals.
//!
//! Input PGM samples are normalised to `[0, 1]` by the file's maxval so that
//! feature thresholds mean the same thing at every bit depth. Output is
//! always 8-bit binary (P5 / P6).

use crate::analytic::Signal1D;
use crate::error::{Error, Result};
use crate::image::RealImage;
use std::f64::consts::TAU;
use std::path::Path;

pub fn read_pgm(path: impl AsRef<Path>) -> Result<RealImage> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    parse_pgm(&bytes)
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    /// Skips whitespace and `#` comments.
    fn skip_space(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn unsigned(&mut self, what: &str) -> Result<u32> {
        self.skip_space();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(if self.pos >= self.bytes.len() {
                self.err(format!("unexpected end of data, expected {what}"))
            } else {
                self.err(format!("expected {what}"))
            });
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse {
                offset: start,
                message: format!("{what} out of range"),
            })
    }
}

/// Parses a P2 (ASCII) or P5 (binary) graymap.
pub fn parse_pgm(bytes: &[u8]) -> Result<RealImage> {
    let mut cur = Cursor { bytes, pos: 0 };
    let binary = match bytes.get(..2) {
        Some(b"P5") => true,
        Some(b"P2") => false,
        _ => return Err(cur.err("unsupported magic number, expected P2 or P5")),
    };
    cur.pos = 2;
    let width = cur.unsigned("width")? as usize;
    let height = cur.unsigned("height")? as usize;
    let maxval_offset = cur.pos;
    let maxval = cur.unsigned("maxval")?;
    if width == 0 || height == 0 {
        return Err(Error::Parse {
            offset: maxval_offset,
            message: format!("zero image dimension {width}x{height}"),
        });
    }
    if maxval == 0 || maxval > 65535 {
        return Err(Error::Parse {
            offset: maxval_offset,
            message: format!("maxval must be in 1..=65535, got {maxval}"),
        });
    }
    let count = width
        .checked_mul(height)
        .ok_or_else(|| cur.err("image dimensions overflow"))?;
    let scale = 1.0 / maxval as f64;
    let mut data = Vec::with_capacity(count);

    if binary {
        if !cur.bytes.get(cur.pos).is_some_and(u8::is_ascii_whitespace) {
            return Err(cur.err("expected a single whitespace byte before raster"));
        }
        cur.pos += 1;
        let wide = maxval > 255;
        let bps = if wide { 2 } else { 1 };
        let need = count * bps;
        let raster = &bytes[cur.pos..];
        if raster.len() < need {
            return Err(Error::Parse {
                offset: bytes.len(),
                message: format!("truncated raster: expected {need} bytes, found {}", raster.len()),
            });
        }
        for (i, chunk) in raster[..need].chunks_exact(bps).enumerate() {
            let v = if wide {
                u16::from_be_bytes([chunk[0], chunk[1]]) as u32
            } else {
                chunk[0] as u32
            };
            if v > maxval {
                return Err(Error::Parse {
                    offset: cur.pos + i * bps,
                    message: format!("sample {v} exceeds maxval {maxval}"),
                });
            }
            data.push(v as f64 * scale);
        }
    } else {
        for _ in 0..count {
            let offset = cur.pos;
            let v = cur.unsigned("sample")?;
            if v > maxval {
                return Err(Error::Parse {
                    offset,
                    message: format!("sample {v} exceeds maxval {maxval}"),
                });
            }
            data.push(v as f64 * scale);
        }
    }
    RealImage::new(height, width, data)
}

/// Maps `[lo, hi]` linearly onto `0..=255`, clamping and rounding half away from zero.
#[inline]
fn quantize(v: f64, lo: f64, hi: f64) -> u8 {
    let t = ((v - lo) / (hi - lo) * 255.0).clamp(0.0, 255.0);
    t.round() as u8
}

fn check_range((lo, hi): (f64, f64)) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidParameter(format!(
            "display range must satisfy lo < hi, got ({lo}, {hi})"
        )));
    }
    Ok(())
}

/// Encodes `img` as an 8-bit binary PGM with display range `range`.
pub fn encode_pgm(img: &RealImage, range: (f64, f64)) -> Result<Vec<u8>> {
    check_range(range)?;
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend(img.data().iter().map(|&v| quantize(v, range.0, range.1)));
    Ok(out)
}

pub fn write_pgm(img: &RealImage, path: impl AsRef<Path>, range: (f64, f64)) -> Result<()> {
    let bytes = encode_pgm(img, range)?;
    let path = path.as_ref();
    std::fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

/// Standard HSV to 8-bit RGB.
pub fn hsv_to_rgb(hue_deg: f64, saturation: f64, value: f64) -> [u8; 3] {
    let h = hue_deg.rem_euclid(360.0) / 60.0;
    let c = value * saturation;
    let x = c * (1.0 - (h % 2.0 - 1.0).abs());
    let m = value - c;
    let (r, g, b) = match h as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    [r, g, b].map(|v| ((v + m) * 255.0).clamp(0.0, 255.0).round() as u8)
}

/// Hue from `orientation`, saturation from `magnitude / max(magnitude)`, value 1.
pub fn encode_orientation_ppm(orientation: &RealImage, magnitude: &RealImage) -> Result<Vec<u8>> {
    if orientation.dims() != magnitude.dims() {
        return Err(Error::ShapeMismatch {
            expected: orientation.dims(),
            actual: magnitude.dims(),
        });
    }
    let max = magnitude.data().iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    let mut out = format!("P6\n{} {}\n255\n", orientation.width(), orientation.height()).into_bytes();
    for (&theta, &mag) in orientation.data().iter().zip(magnitude.data()) {
        let hue = theta.rem_euclid(TAU) / TAU * 360.0;
        let sat = if max > 0.0 { (mag.abs() / max).min(1.0) } else { 0.0 };
        out.extend_from_slice(&hsv_to_rgb(hue, sat, 1.0));
    }
    Ok(out)
}

pub fn write_orientation_ppm(orientation: &RealImage, magnitude: &RealImage, path: impl AsRef<Path>) -> Result<()> {
    let bytes = encode_orientation_ppm(orientation, magnitude)?;
    let path = path.as_ref();
    std::fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

pub fn read_csv_signal(path: impl AsRef<Path>) -> Result<Signal1D> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_csv_signal(&text)
}

/// One value per line; an optional first line `value` is skipped, blank lines are ignored.
pub fn parse_csv_signal(text: &str) -> Result<Signal1D> {
    let mut samples = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let field = line.trim();
        if field.is_empty() || (i == 0 && field.eq_ignore_ascii_case("value")) {
            continue;
        }
        let v: f64 = field.parse().map_err(|_| Error::ParseLine {
            line: i + 1,
            message: format!("not a number: {field:?}"),
        })?;
        if !v.is_finite() {
            return Err(Error::ParseLine {
                line: i + 1,
                message: format!("non-finite value {field:?}"),
            });
        }
        samples.push(v);
    }
    if samples.is_empty() {
        return Err(Error::InvalidInput("signal file contains no samples".into()));
    }
    Signal1D::new(samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn p5_8bit() {
        let mut bytes = b"P5\n2 2\n255\n".to_vec();
        bytes.extend_from_slice(&[0, 128, 255, 64]);
        let img = parse_pgm(&bytes).unwrap();
        assert_eq!(img.dims(), (2, 2));
        assert_eq!(img.data(), &[0.0, 128.0 / 255.0, 1.0, 64.0 / 255.0]);
        let ascii = parse_pgm(b"P2\n# comment\n2 2\n255\n0 128\n255 64\n").unwrap();
        assert_eq!(ascii, img);
    }

    #[test]
    fn p5_16bit_big_endian() {
        let mut bytes = b"P5 2 1 65535\n".to_vec();
        bytes.extend_from_slice(&[0x01, 0x00, 0xff, 0xff]);
        let img = parse_pgm(&bytes).unwrap();
        assert_eq!(img.data(), &[256.0 / 65535.0, 1.0]);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_pgm(b"P6\n1 1\n255\n\0") {
            Err(Error::Parse { offset: 0, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_pgm(b"P5\n2 2\n255\n\x01\x02") {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 13);
                assert!(message.contains("truncated"));
            }
            other => panic!("{other:?}"),
        }
        match parse_pgm(b"P2\n2 x\n") {
            Err(Error::Parse { offset: 5, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_pgm(b"P2 1 1 255 300").is_err());
        assert!(parse_pgm(b"P2 1 1 0 0").is_err());
    }

    #[test]
    fn pgm_range_mapping() {
        let img = RealImage::new(1, 3, vec![0.0, PI, PI / 2.0]).unwrap();
        let bytes = encode_pgm(&img, (0.0, PI)).unwrap();
        assert_eq!(&bytes[bytes.len() - 3..], &[0, 255, 128]);
        let signed = RealImage::new(1, 3, vec![0.0, -1.0, 5.0]).unwrap();
        let bytes = encode_pgm(&signed, (-1.0, 1.0)).unwrap();
        assert_eq!(&bytes[bytes.len() - 3..], &[128, 0, 255]);
        assert!(encode_pgm(&img, (1.0, 1.0)).is_err());
    }

    #[test]
    fn hue_encoding() {
        assert_eq!(hsv_to_rgb(0.0, 1.0, 1.0), [255, 0, 0]);
        assert_eq!(hsv_to_rgb(120.0, 1.0, 1.0), [0, 255, 0]);
        assert_eq!(hsv_to_rgb(240.0, 1.0, 1.0), [0, 0, 255]);
        assert_eq!(hsv_to_rgb(77.0, 0.0, 1.0), [255, 255, 255]);

        let theta = RealImage::new(1, 3, vec![0.0, 2.0 * PI / 3.0, -2.0 * PI / 3.0]).unwrap();
        let mag = RealImage::new(1, 3, vec![1.0, 1.0, 1.0]).unwrap();
        let ppm = encode_orientation_ppm(&theta, &mag).unwrap();
        assert!(ppm.starts_with(b"P6\n3 1\n255\n"));
        assert_eq!(&ppm[ppm.len() - 9..], &[255, 0, 0, 0, 255, 0, 0, 0, 255]);

        let zero = RealImage::zeros(1, 3).unwrap();
        let ppm = encode_orientation_ppm(&theta, &zero).unwrap();
        assert!(ppm[ppm.len() - 9..].iter().all(|&b| b == 255));
        assert!(encode_orientation_ppm(&theta, &RealImage::zeros(3, 1).unwrap()).is_err());
    }

    #[test]
    fn csv_signals() {
        assert_eq!(parse_csv_signal("1\n2\n3\n").unwrap().samples(), &[1.0, 2.0, 3.0]);
        assert_eq!(
            parse_csv_signal("value\n-1.5\n2e-3\n").unwrap().samples(),
            &[-1.5, 0.002]
        );
        assert!(matches!(parse_csv_signal(""), Err(Error::InvalidInput(_))));
        assert!(matches!(parse_csv_signal("value\n"), Err(Error::InvalidInput(_))));
        match parse_csv_signal("1\nabc\n") {
            Err(Error::ParseLine { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}
