//! Command-line front end.
//!
//! Every artifact lands in the output directory as
//! `<stem>_<measure>_l<λ₀>.{pgm,ppm}` (per scale) or `<stem>_<measure>_ms.*`
//! (multiscale). Display ranges are fixed per measure so outputs from
//! different runs can be compared directly.

use crate::analytic::{
    analytic_signal, filtered_analytic_1d, hilbert_transform, local_phase_amplitude_1d, scaleogram, LogGabor1DParams,
    Signal1D,
};
use crate::error::{Error, Result};
use crate::features::{self, FeatureMap, FeatureParams};
use crate::fft;
use crate::filterbank::{FilterBank, FilterBankCache, LogGabor2DParams};
use crate::image::{ComplexImage, RealImage};
use crate::io;
use crate::monogenic::{self, compute_monogenic, MonogenicScale};
use clap::{Args, Parser, Subcommand};
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "monoline", version, about = "Analytic and monogenic signal analysis")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Monogenic maps of a PGM image (default: amplitude, phase, orientation).
    Image(ImageArgs),
    /// Feature symmetry/asymmetry maps of a PGM image (default: sym, asym).
    Features(ImageArgs),
    /// Local-phase scaleogram of a CSV signal.
    Scaleogram(SignalArgs),
    /// Frequency- and image-domain dumps of the filter bank.
    Filters(FilterArgs),
    /// Analytic signal (raw and log-Gabor filtered) of a CSV signal, written as CSV.
    Signal(SignalArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Centre wavelengths in samples: `20,60,100` or `start:stop:step` (inclusive).
    #[arg(long)]
    pub wavelengths: Option<String>,
    /// Log-Gabor shape parameter in (0, 1).
    #[arg(long)]
    pub sigma0: Option<f64>,
    /// Output directory (created if missing).
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
    /// Comma-separated list of artifacts to write.
    #[arg(long)]
    pub emit: Option<String>,
}

#[derive(Debug, Args)]
pub struct ImageArgs {
    /// Input image, PGM (P2 or P5).
    pub input: PathBuf,
    #[command(flatten)]
    pub common: CommonArgs,
    /// Feature threshold in normalised intensity units.
    #[arg(short = 'T', long, allow_negative_numbers = true, default_value_t = FeatureParams::DEFAULT_THRESHOLD)]
    pub threshold: f64,
    /// Stabiliser added to the amplitude in feature denominators.
    #[arg(long, allow_negative_numbers = true, default_value_t = FeatureParams::DEFAULT_EPSILON)]
    pub epsilon: f64,
    /// Mirror-pad to twice the size before filtering, crop afterwards.
    #[arg(long)]
    pub pad: bool,
    /// Divide multiscale sums by the number of scales.
    #[arg(long)]
    pub normalize_multiscale: bool,
}

#[derive(Debug, Args)]
pub struct SignalArgs {
    /// Input signal, one value per line with an optional `value` header.
    pub input: PathBuf,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct FilterArgs {
    /// Grid size as `HxW` (or a single number for square grids).
    #[arg(long, default_value = "256x256")]
    pub size: String,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Image,
    Features,
    Scaleogram,
    Filters,
    Signal,
}

/// Artifacts selectable with `--emit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Emit {
    Amplitude,
    Phase,
    Orientation,
    Even,
    Odd1,
    Odd2,
    Sym,
    Asym,
    SignedSym,
    OrientedAsym,
    MultiscaleSym,
    MultiscaleAsym,
    MultiscaleSignedSym,
    MultiscaleOrientedAsym,
    Filters,
    Scaleogram,
}

impl Emit {
    const ALL: [Emit; 16] = [
        Emit::Amplitude,
        Emit::Phase,
        Emit::Orientation,
        Emit::Even,
        Emit::Odd1,
        Emit::Odd2,
        Emit::Sym,
        Emit::Asym,
        Emit::SignedSym,
        Emit::OrientedAsym,
        Emit::MultiscaleSym,
        Emit::MultiscaleAsym,
        Emit::MultiscaleSignedSym,
        Emit::MultiscaleOrientedAsym,
        Emit::Filters,
        Emit::Scaleogram,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Emit::Amplitude => "amplitude",
            Emit::Phase => "phase",
            Emit::Orientation => "orientation",
            Emit::Even => "even",
            Emit::Odd1 => "odd1",
            Emit::Odd2 => "odd2",
            Emit::Sym => "sym",
            Emit::Asym => "asym",
            Emit::SignedSym => "signed-sym",
            Emit::OrientedAsym => "oriented-asym",
            Emit::MultiscaleSym => "multiscale-sym",
            Emit::MultiscaleAsym => "multiscale-asym",
            Emit::MultiscaleSignedSym => "multiscale-signed-sym",
            Emit::MultiscaleOrientedAsym => "multiscale-oriented-asym",
            Emit::Filters => "filters",
            Emit::Scaleogram => "scaleogram",
        }
    }

    fn parse(s: &str) -> Result<Emit> {
        Emit::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown --emit item {s:?}")))
    }

    fn is_multiscale(self) -> bool {
        matches!(
            self,
            Emit::MultiscaleSym | Emit::MultiscaleAsym | Emit::MultiscaleSignedSym | Emit::MultiscaleOrientedAsym
        )
    }

    fn allowed_for(self, command: Command) -> bool {
        match command {
            Command::Image | Command::Features => self != Emit::Scaleogram,
            Command::Filters => self == Emit::Filters,
            Command::Scaleogram | Command::Signal => self == Emit::Scaleogram,
        }
    }
}

/// Validated settings for one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub input: Option<PathBuf>,
    pub out_dir: PathBuf,
    pub wavelengths: Vec<f64>,
    pub sigma0: f64,
    pub threshold: f64,
    pub epsilon: f64,
    pub pad: bool,
    pub normalize_multiscale: bool,
    pub emit: Vec<Emit>,
    /// Grid size for the `filters` command.
    pub size: (usize, usize),
}

/// Parses `20,60,100`, `5:100:5` or a mix of both.
pub fn parse_wavelengths(spec: &str) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let bad = || Error::InvalidParameter(format!("cannot parse wavelength item {item:?}"));
        let parts: Vec<&str> = item.split(':').collect();
        match parts.as_slice() {
            [v] => out.push(v.parse::<f64>().map_err(|_| bad())?),
            [start, stop, step] => {
                let start: f64 = start.parse().map_err(|_| bad())?;
                let stop: f64 = stop.parse().map_err(|_| bad())?;
                let step: f64 = step.parse().map_err(|_| bad())?;
                if !(step > 0.0 && step.is_finite() && start.is_finite() && stop >= start) {
                    return Err(Error::InvalidParameter(format!(
                        "range {item:?} needs start <= stop and a positive step"
                    )));
                }
                let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
                out.extend((0..count).map(|i| start + i as f64 * step));
            }
            _ => return Err(bad()),
        }
    }
    if out.is_empty() {
        return Err(Error::InvalidParameter("no wavelengths given".into()));
    }
    for &l in &out {
        if !(l.is_finite() && l > 2.0) {
            return Err(Error::InvalidParameter(format!(
                "wavelength {l} is not above 2 samples: the filter centre would lie beyond Nyquist"
            )));
        }
    }
    Ok(out)
}

fn parse_emit(spec: &str, command: Command) -> Result<Vec<Emit>> {
    let mut out = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let e = Emit::parse(item)?;
        if !e.allowed_for(command) {
            return Err(Error::InvalidParameter(format!(
                "--emit {item} is not available for this command"
            )));
        }
        if !out.contains(&e) {
            out.push(e);
        }
    }
    Ok(out)
}

fn parse_size(spec: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidParameter(format!("cannot parse size {spec:?}, expected HxW"));
    let (h, w) = match spec.split_once(['x', 'X']) {
        Some((h, w)) => (
            h.trim().parse().map_err(|_| bad())?,
            w.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let n = spec.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if h == 0 || w == 0 {
        return Err(bad());
    }
    Ok((h, w))
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<RunConfig> {
        let (command, input, common, threshold, epsilon, pad, normalize, size) = match cli.command {
            CliCommand::Image(a) => (
                Command::Image,
                Some(a.input),
                a.common,
                a.threshold,
                a.epsilon,
                a.pad,
                a.normalize_multiscale,
                None,
            ),
            CliCommand::Features(a) => (
                Command::Features,
                Some(a.input),
                a.common,
                a.threshold,
                a.epsilon,
                a.pad,
                a.normalize_multiscale,
                None,
            ),
            CliCommand::Scaleogram(a) => (
                Command::Scaleogram,
                Some(a.input),
                a.common,
                0.0,
                1.0,
                false,
                false,
                None,
            ),
            CliCommand::Signal(a) => (Command::Signal, Some(a.input), a.common, 0.0, 1.0, false, false, None),
            CliCommand::Filters(a) => (
                Command::Filters,
                None,
                a.common,
                0.0,
                1.0,
                false,
                false,
                Some(parse_size(&a.size)?),
            ),
        };

        let (default_wavelengths, default_sigma, default_emit) = match command {
            Command::Image => ("20,60,100", 0.5, "amplitude,phase,orientation"),
            Command::Features => ("20,60,100", 0.5, "sym,asym"),
            Command::Filters => ("20,60,100", 0.5, "filters"),
            Command::Scaleogram => ("5:100:5", 0.6, "scaleogram"),
            Command::Signal => ("20", 0.6, ""),
        };
        let wavelengths = parse_wavelengths(common.wavelengths.as_deref().unwrap_or(default_wavelengths))?;
        let sigma0 = common.sigma0.unwrap_or(default_sigma);
        if !(sigma0 > 0.0 && sigma0 < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "sigma0 must lie in (0, 1), got {sigma0}"
            )));
        }
        FeatureParams::new(threshold, epsilon)?;
        let emit = parse_emit(common.emit.as_deref().unwrap_or(default_emit), command)?;
        if emit.is_empty() && command != Command::Signal {
            return Err(Error::InvalidParameter("--emit selects nothing".into()));
        }

        Ok(RunConfig {
            command,
            input,
            out_dir: common.out_dir,
            wavelengths,
            sigma0,
            threshold,
            epsilon,
            pad,
            normalize_multiscale: normalize,
            emit,
            size: size.unwrap_or((256, 256)),
        })
    }

    fn stem(&self) -> String {
        self.input
            .as_deref()
            .and_then(Path::file_stem)
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "filters".to_string())
    }

    fn feature_params(&self) -> Result<FeatureParams> {
        FeatureParams::new(self.threshold, self.epsilon)
    }

    fn scales_2d(&self) -> Result<Vec<LogGabor2DParams>> {
        self.wavelengths
            .iter()
            .map(|&l| LogGabor2DParams::new(l, self.sigma0))
            .collect()
    }
}

/// Output sink: writes files and reports one summary line per artifact.
struct Artifacts<'a, W: Write> {
    dir: PathBuf,
    stem: String,
    log: &'a mut W,
    written: Vec<PathBuf>,
}

impl<W: Write> Artifacts<'_, W> {
    fn path(&self, measure: &str, tag: &str, ext: &str) -> PathBuf {
        self.dir.join(format!("{}_{}_{}.{}", self.stem, measure, tag, ext))
    }

    fn finish(&mut self, path: PathBuf, bytes: &[u8], detail: &str) -> Result<()> {
        std::fs::write(&path, bytes).map_err(|e| Error::io(&path, e))?;
        writeln!(self.log, "wrote {} ({detail})", path.display()).map_err(|e| Error::io(&path, e))?;
        self.written.push(path);
        Ok(())
    }

    fn pgm(&mut self, measure: &str, tag: &str, img: &RealImage, range: (f64, f64)) -> Result<()> {
        let path = self.path(measure, tag, "pgm");
        let bytes = io::encode_pgm(img, range)?;
        let detail = format!(
            "{measure}, {}x{}, range [{:.4}, {:.4}]",
            img.height(),
            img.width(),
            range.0,
            range.1
        );
        self.finish(path, &bytes, &detail)
    }

    fn ppm(&mut self, measure: &str, tag: &str, hue: &RealImage, saturation: &RealImage) -> Result<()> {
        let path = self.path(measure, tag, "ppm");
        let bytes = io::encode_orientation_ppm(hue, saturation)?;
        let detail = format!("{measure}, {}x{}, hue-encoded", hue.height(), hue.width());
        self.finish(path, &bytes, &detail)
    }

    fn text(&mut self, measure: &str, tag: &str, body: &str) -> Result<()> {
        let path = if tag.is_empty() {
            self.dir.join(format!("{}_{}.csv", self.stem, measure))
        } else {
            self.path(measure, tag, "csv")
        };
        self.finish(path, body.as_bytes(), measure)
    }
}

fn scale_tag(lambda: f64) -> String {
    format!("l{lambda}")
}

/// `(0, max)` with a fallback for all-zero maps.
fn positive_range(img: &RealImage) -> (f64, f64) {
    let m = img.max_abs();
    (0.0, if m > 0.0 { m } else { 1.0 })
}

fn symmetric_range(img: &RealImage) -> (f64, f64) {
    let m = img.max_abs();
    let m = if m > 0.0 { m } else { 1.0 };
    (-m, m)
}

/// Runs one configured invocation, writing artifacts and one summary line
/// per artifact to `log`. Returns the written paths in order.
pub fn run(config: &RunConfig, log: &mut impl Write) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(&config.out_dir).map_err(|e| Error::io(&config.out_dir, e))?;
    let mut out = Artifacts {
        dir: config.out_dir.clone(),
        stem: config.stem(),
        log,
        written: Vec::new(),
    };
    match config.command {
        Command::Image | Command::Features => run_image(config, &mut out)?,
        Command::Filters => {
            let cache = FilterBankCache::new();
            let bank = cache.get_or_build(config.size.0, config.size.1, &config.scales_2d()?)?;
            dump_filters(&bank, &mut out)?;
        }
        Command::Scaleogram => {
            let signal = io::read_csv_signal(input_path(config)?)?;
            let s = scaleogram(&signal, &config.wavelengths, config.sigma0)?;
            out.pgm("scaleogram", "all", &s, (-PI, PI))?;
        }
        Command::Signal => run_signal(config, &mut out)?,
    }
    Ok(out.written)
}

fn input_path(config: &RunConfig) -> Result<&Path> {
    config
        .input
        .as_deref()
        .ok_or_else(|| Error::InvalidInput("no input file given".into()))
}

fn run_image<W: Write>(config: &RunConfig, out: &mut Artifacts<'_, W>) -> Result<()> {
    let img = io::read_pgm(input_path(config)?)?;
    let (h, w) = img.dims();
    let work = if config.pad { img.mirror_pad() } else { img };
    let cache = FilterBankCache::new();
    let bank = cache.get_or_build(work.height(), work.width(), &config.scales_2d()?)?;
    let mut scales = compute_monogenic(&work, &bank)?;
    if config.pad {
        scales = scales.iter().map(|s| s.crop(h, w)).collect::<Result<_>>()?;
    }
    let p = config.feature_params()?;

    for ms in &scales {
        let tag = scale_tag(ms.params().center_wavelength());
        for &e in config
            .emit
            .iter()
            .filter(|e| !e.is_multiscale() && **e != Emit::Filters)
        {
            emit_scale(e, ms, &p, &tag, out)?;
        }
    }

    let n = scales.len() as f64;
    let norm = if config.normalize_multiscale { 1.0 / n } else { 1.0 };
    let bound = if config.normalize_multiscale { 1.0 } else { n };
    for &e in config.emit.iter().filter(|e| e.is_multiscale()) {
        let scaled = |m: FeatureMap| m.real().expect("real feature map").map(|v| v * norm);
        match e {
            Emit::MultiscaleSym => {
                let m = scaled(features::multiscale_symmetry(&scales, &p)?);
                out.pgm(e.name(), "ms", &m, (0.0, bound))?;
            }
            Emit::MultiscaleAsym => {
                let m = scaled(features::multiscale_asymmetry(&scales, &p)?);
                out.pgm(e.name(), "ms", &m, (0.0, bound))?;
            }
            Emit::MultiscaleSignedSym => {
                let m = scaled(features::multiscale_signed_symmetry(&scales, &p)?);
                out.pgm(e.name(), "ms", &m, (-bound, bound))?;
            }
            Emit::MultiscaleOrientedAsym => {
                let m = features::multiscale_oriented_asymmetry(&scales, &p)?;
                let c = m.complex().expect("complex feature map");
                out.ppm(e.name(), "ms", &c.arg(), &c.norm())?;
            }
            _ => unreachable!(),
        }
    }

    if config.emit.contains(&Emit::Filters) {
        dump_filters(&bank, out)?;
    }
    Ok(())
}

fn emit_scale<W: Write>(
    e: Emit,
    ms: &MonogenicScale,
    p: &FeatureParams,
    tag: &str,
    out: &mut Artifacts<'_, W>,
) -> Result<()> {
    let name = e.name();
    match e {
        Emit::Amplitude => {
            let a = monogenic::local_amplitude(ms);
            out.pgm(name, tag, &a, positive_range(&a))
        }
        Emit::Phase => out.pgm(name, tag, &monogenic::local_phase(ms), (0.0, PI)),
        Emit::Orientation => out.ppm(
            name,
            tag,
            &monogenic::local_orientation(ms),
            &monogenic::combined_odd(ms),
        ),
        Emit::Even => out.pgm(name, tag, ms.even(), symmetric_range(ms.even())),
        Emit::Odd1 => out.pgm(name, tag, ms.odd1(), symmetric_range(ms.odd1())),
        Emit::Odd2 => out.pgm(name, tag, ms.odd2(), symmetric_range(ms.odd2())),
        Emit::Sym => out.pgm(name, tag, features::feature_symmetry(ms, p).real().unwrap(), (0.0, 1.0)),
        Emit::Asym => out.pgm(
            name,
            tag,
            features::feature_asymmetry(ms, p).real().unwrap(),
            (0.0, 1.0),
        ),
        Emit::SignedSym => out.pgm(name, tag, features::signed_symmetry(ms, p).real().unwrap(), (-1.0, 1.0)),
        Emit::OrientedAsym => {
            let m = features::oriented_asymmetry(ms, p);
            let c = m.complex().unwrap();
            out.ppm(name, tag, &c.arg(), &c.norm())
        }
        _ => unreachable!("multiscale and filter dumps are handled by the caller"),
    }
}

/// Swaps quadrants so that DC lands in the centre.
fn fftshift<T: Copy>(h: usize, w: usize, data: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(data.len());
    for y in 0..h {
        let sy = (y + h - h / 2) % h;
        for x in 0..w {
            let sx = (x + w - w / 2) % w;
            out.push(data[sy * w + sx]);
        }
    }
    out
}

fn dump_filters<W: Write>(bank: &FilterBank, out: &mut Artifacts<'_, W>) -> Result<()> {
    let (h, w) = bank.dims();
    for (s, p) in bank.scales().iter().enumerate() {
        let tag = scale_tag(p.center_wavelength());

        let even = bank.even(s);
        let even_freq = RealImage::from_raw(h, w, fftshift(h, w, even.data()));
        out.pgm("filter-even", &tag, &even_freq, (0.0, 1.0))?;

        let odd = bank.odd_complex(s);
        let odd_freq = ComplexImage::from_raw(h, w, fftshift(h, w, odd.data()));
        out.ppm("filter-odd", &tag, &odd_freq.arg(), &odd_freq.norm())?;

        let mut buf: Vec<_> = even.data().iter().map(|&g| crate::Complex64::new(g, 0.0)).collect();
        fft::ifft2(h, w, &mut buf);
        let even_spatial = RealImage::from_raw(h, w, fftshift(h, w, &buf).into_iter().map(|c| c.re).collect());
        out.pgm(
            "filter-even-spatial",
            &tag,
            &even_spatial,
            symmetric_range(&even_spatial),
        )?;

        let mut buf = odd.data().to_vec();
        fft::ifft2(h, w, &mut buf);
        let odd_spatial = ComplexImage::from_raw(h, w, fftshift(h, w, &buf));
        out.ppm("filter-odd-spatial", &tag, &odd_spatial.arg(), &odd_spatial.norm())?;
    }
    Ok(())
}

fn run_signal<W: Write>(config: &RunConfig, out: &mut Artifacts<'_, W>) -> Result<()> {
    let signal: Signal1D = io::read_csv_signal(input_path(config)?)?;

    let fa = analytic_signal(&signal)?;
    let h = hilbert_transform(&signal)?;
    let (amp, phase) = local_phase_amplitude_1d(&fa);
    let mut body = String::from("index,signal,hilbert,amplitude,phase\n");
    for i in 0..signal.len() {
        let _ = writeln!(
            body,
            "{i},{},{},{},{}",
            signal.samples()[i],
            h.samples()[i],
            amp[i],
            phase[i]
        );
    }
    out.text("analytic", "", &body)?;

    for &l in &config.wavelengths {
        let p = LogGabor1DParams::new(l, config.sigma0)?;
        let fa = filtered_analytic_1d(&signal, &p)?;
        let (amp, phase) = local_phase_amplitude_1d(&fa);
        let mut body = String::from("index,signal,real,imag,amplitude,phase\n");
        for (i, c) in fa.samples().iter().enumerate() {
            let _ = writeln!(
                body,
                "{i},{},{},{},{},{}",
                signal.samples()[i],
                c.re,
                c.im,
                amp[i],
                phase[i]
            );
        }
        out.text("analytic", &scale_tag(l), &body)?;
    }

    if config.emit.contains(&Emit::Scaleogram) {
        let s = scaleogram(&signal, &config.wavelengths, config.sigma0)?;
        out.pgm("scaleogram", "all", &s, (-PI, PI))?;
    }
    Ok(())
}

/// Parses `args` (including the program name), runs, and maps errors to a
/// non-zero exit code with a diagnostic on standard error.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| run(&cfg, &mut std::io::stdout().lock()));
    match result {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("monoline: {e}");
            ExitCode::FAILURE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(args: &[&str]) -> Result<RunConfig> {
        let mut argv = vec!["monoline"];
        argv.extend_from_slice(args);
        RunConfig::from_cli(Cli::try_parse_from(argv).expect("clap parse"))
    }

    #[test]
    fn wavelength_syntax() {
        assert_eq!(parse_wavelengths("20,60,100").unwrap(), vec![20.0, 60.0, 100.0]);
        let r = parse_wavelengths("5:100:5").unwrap();
        assert_eq!(r.len(), 20);
        assert_eq!((r[0], r[19]), (5.0, 100.0));
        assert_eq!(parse_wavelengths("3, 8:12:2").unwrap(), vec![3.0, 8.0, 10.0, 12.0]);
        assert!(parse_wavelengths("").is_err());
        assert!(parse_wavelengths("5:1:1").is_err());
        assert!(parse_wavelengths("5:10:0").is_err());
        assert!(parse_wavelengths("a").is_err());
        let err = parse_wavelengths("2,10").unwrap_err().to_string();
        assert!(err.contains("Nyquist"), "{err}");
        assert!(parse_wavelengths("1.5").is_err());
    }

    #[test]
    fn defaults_per_command() {
        let c = config(&["image", "x.pgm"]).unwrap();
        assert_eq!(c.wavelengths, vec![20.0, 60.0, 100.0]);
        assert_eq!(c.sigma0, 0.5);
        assert_eq!(c.emit, vec![Emit::Amplitude, Emit::Phase, Emit::Orientation]);
        assert_eq!(c.threshold, 0.18);
        assert_eq!(c.epsilon, 1e-3);
        let c = config(&["scaleogram", "s.csv"]).unwrap();
        assert_eq!(c.wavelengths.len(), 20);
        assert_eq!(c.sigma0, 0.6);
        let c = config(&["filters", "--size", "64x32"]).unwrap();
        assert_eq!(c.size, (64, 32));
        assert_eq!(c.stem(), "filters");
    }

    #[test]
    fn flag_validation() {
        assert!(config(&["image", "x.pgm", "--wavelengths", "2"]).is_err());
        assert!(config(&["image", "x.pgm", "--sigma0", "1.0"]).is_err());
        assert!(config(&["features", "x.pgm", "-T", "-0.5"]).is_err());
        assert!(config(&["features", "x.pgm", "--epsilon", "0"]).is_err());
        assert!(config(&["image", "x.pgm", "--emit", "bogus"]).is_err());
        assert!(config(&["image", "x.pgm", "--emit", "scaleogram"]).is_err());
        assert!(config(&["scaleogram", "s.csv", "--emit", "phase"]).is_err());
        assert!(config(&["filters", "--size", "0x4"]).is_err());
        let c = config(&["features", "x.pgm", "--emit", "sym,sym,oriented-asym", "--pad"]).unwrap();
        assert_eq!(c.emit, vec![Emit::Sym, Emit::OrientedAsym]);
        assert!(c.pad);
    }

    #[test]
    fn fftshift_centres_dc() {
        let d: Vec<usize> = (0..12).collect();
        let s = fftshift(3, 4, &d);
        // DC (index 0) moves to (h/2, w/2) = (1, 2)
        assert_eq!(s[4 + 2], 0);
    }
}
