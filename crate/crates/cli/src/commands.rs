use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::Path;

use smfrft::grid::SignalSpec;
use smfrft::theorems::{run_suite_with, IdentityReport, SuiteConfig, Tolerances};
use smfrft::transform::{fft_ugrid, ismfrft_direct, ismfrft_fast, smfrft_direct, smfrft_fast};
use smfrft::{Angle, Spectrum, UniformGrid};

use crate::args::{
    AngleArgs, Command, FilterArgs, GenerateArgs, GridArgs, InvertArgs, Method, SignalKind,
    TransformArgs, VerifyArgs,
};
use crate::csvio::{read_signal, read_spectrum, write_signal, write_spectrum};
use crate::error::CliError;

/// Successful completion, distinguishing a verification run with failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    VerifyFailed,
}

pub const DEFAULT_START: f64 = -16.0;
pub const DEFAULT_STEP: f64 = 1.0 / 64.0;
pub const DEFAULT_COUNT: usize = 2048;

pub fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Generate(a) => generate(&a),
        Command::Transform(a) => transform(&a),
        Command::Invert(a) => invert(&a),
        Command::Filter(a) => filter(&a),
        Command::Verify(a) => verify(&a),
    }
    .map(|()| Outcome::Success)
    .or_else(|e| match e {
        Failure::Verify => Ok(Outcome::VerifyFailed),
        Failure::Error(e) => Err(e),
    })
}

enum Failure {
    Verify,
    Error(CliError),
}

impl<E: Into<CliError>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Error(e.into())
    }
}

fn angle_of(phi: Option<f64>, order: Option<f64>) -> Result<Option<Angle>, CliError> {
    Ok(match (phi, order) {
        (Some(phi), _) => Some(Angle::new(phi)?),
        (None, Some(a)) => Some(Angle::from_order(a)?),
        (None, None) => None,
    })
}

fn required_angle(a: &AngleArgs) -> Result<Angle, CliError> {
    angle_of(a.angle, a.order)?
        .ok_or_else(|| CliError::Usage("one of --angle or --order is required".into()))
}

fn generate(a: &GenerateArgs) -> Result<(), Failure> {
    let grid = UniformGrid::new(
        a.grid.start.unwrap_or(DEFAULT_START),
        a.grid.step.unwrap_or(DEFAULT_STEP),
        a.grid.count.unwrap_or(DEFAULT_COUNT),
    )?;
    let spec = match a.kind {
        SignalKind::Gaussian => SignalSpec::Gaussian {
            center: a.center,
            width: a.width,
            carrier: a.carrier,
        },
        SignalKind::Chirp => SignalSpec::Chirp {
            rate: a.rate,
            width: a.width,
        },
    };
    write_signal(a.output.as_deref(), &spec.sample(&grid)?)?;
    Ok(())
}

fn transform(a: &TransformArgs) -> Result<(), Failure> {
    let angle = required_angle(&a.angle)?;
    let x = read_signal(&a.input)?;
    let spectrum = match a.method {
        Method::Fast => {
            if a.ugrid.is_some() {
                return Err(CliError::Usage("--ugrid requires --method direct".into()).into());
            }
            smfrft_fast(&x, &angle)?
        }
        Method::Direct => {
            let ugrid = match a.ugrid {
                Some(g) => g,
                None => fft_ugrid(x.grid())?,
            };
            smfrft_direct(&x, &ugrid, &angle)
        }
    };
    let (et, eu) = (x.energy(), spectrum.energy());
    let rel = if et > 0.0 {
        (eu - et).abs() / et
    } else {
        (eu - et).abs()
    };
    eprintln!(
        "parseval: time energy {et:.15e}, spectral energy {eu:.15e}, relative difference {rel:.3e}"
    );
    write_spectrum(a.output.as_deref(), &spectrum)?;
    Ok(())
}

/// Time grid paired with a spectrum grid: `count` rows, `step = 2pi / (count du)`, centred.
fn paired_tgrid(ugrid: &UniformGrid, g: &GridArgs) -> Result<UniformGrid, CliError> {
    let count = g.count.unwrap_or(ugrid.count());
    let step = g.step.unwrap_or(2.0 * PI / (count as f64 * ugrid.step()));
    let start = g.start.unwrap_or(-(count as f64 / 2.0) * step);
    Ok(UniformGrid::new(start, step, count)?)
}

fn invert(a: &InvertArgs) -> Result<(), Failure> {
    let angle = required_angle(&a.angle)?;
    let (ugrid, values) = read_spectrum(&a.input)?;
    let spectrum = Spectrum::new(ugrid, values, angle)?;
    let tgrid = paired_tgrid(&ugrid, &a.grid)?;
    let x = match a.method {
        Method::Fast => ismfrft_fast(&spectrum, &tgrid, &angle)?,
        Method::Direct => ismfrft_direct(&spectrum, &tgrid, &angle)?,
    };
    write_signal(a.output.as_deref(), &x)?;
    Ok(())
}

fn filter(a: &FilterArgs) -> Result<(), Failure> {
    let angle = required_angle(&a.angle)?;
    let (lo, hi) = a.passband;
    if lo >= hi {
        return Err(CliError::Usage(format!(
            "passband lower edge {lo} must be below upper edge {hi}"
        ))
        .into());
    }
    let x = read_signal(&a.input)?;
    let mut spectrum = smfrft_fast(&x, &angle)?;
    let ugrid = *spectrum.ugrid();
    for (u, v) in ugrid.points().zip(spectrum.values_mut()) {
        if !(lo..=hi).contains(&u) {
            *v = Default::default();
        }
    }
    let y = ismfrft_fast(&spectrum, x.grid(), &angle)?;
    write_signal(a.output.as_deref(), &y)?;
    Ok(())
}

fn load_config(path: &Path) -> Result<SuiteConfig, CliError> {
    let f = File::open(path).map_err(|e| CliError::io(path, e))?;
    let cfg: SuiteConfig =
        serde_json::from_reader(BufReader::new(f)).map_err(|source| CliError::Config {
            path: path.to_path_buf(),
            source,
        })?;
    // deserialization bypasses the constructor checks
    for g in [cfg.grid, cfg.ugrid] {
        UniformGrid::new(g.start(), g.step(), g.count())?;
    }
    Ok(cfg)
}

pub fn suite_config(a: &VerifyArgs) -> Result<SuiteConfig, CliError> {
    let mut cfg = match &a.config {
        Some(p) => load_config(p)?,
        None => SuiteConfig::default(),
    };
    let g = cfg.grid;
    cfg.grid = UniformGrid::new(
        a.grid.start.unwrap_or(g.start()),
        a.grid.step.unwrap_or(g.step()),
        a.grid.count.unwrap_or(g.count()),
    )?;
    if let Some(angle) = angle_of(a.angle.angle, a.angle.order)? {
        cfg.angles = vec![angle.phi()];
    }
    if let Some(tol) = a.tolerance {
        if tol.is_nan() || tol < 0.0 {
            return Err(CliError::Usage(format!(
                "--tolerance must be non-negative, got {tol}"
            )));
        }
        cfg.tolerances = Tolerances::uniform(tol);
    }
    if let Some(ids) = &a.identities {
        cfg.identities = ids.clone();
    }
    Ok(cfg)
}

pub fn summary_header() -> String {
    format!(
        "{:<16} {:>9} {:>6} {:>6} {:>11} {:>9} {:<5} {}",
        "identity", "phi", "d", "q", "residual", "tolerance", "pass", "form"
    )
}

pub fn summary_row(r: &IdentityReport) -> String {
    let form = serde_json::to_value(r.chosen_form)
        .ok()
        .and_then(|v| v.as_str().map(String::from))
        .unwrap_or_default();
    format!(
        "{:<16} {:>9.6} {:>6} {:>6} {:>11.3e} {:>9.1e} {:<5} {}",
        r.identity.name(),
        r.phi,
        r.d,
        r.q,
        r.best_residual(),
        r.tolerance,
        if r.pass { "yes" } else { "NO" },
        form
    )
}

fn verify(a: &VerifyArgs) -> Result<(), Failure> {
    let cfg = suite_config(a)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let io_err = |e| CliError::io("<stdout>", e);
    writeln!(out, "{}", summary_header()).map_err(io_err)?;
    let mut write_err = None;
    let outcome = run_suite_with(&cfg, |r| {
        if let Err(e) = writeln!(out, "{}", summary_row(r)).and_then(|()| out.flush()) {
            write_err.get_or_insert(e);
        }
    })?;
    if let Some(e) = write_err {
        return Err(io_err(e).into());
    }
    let failed = outcome.reports.iter().filter(|r| !r.pass).count();
    writeln!(
        out,
        "{} checks, {} passed, {} failed",
        outcome.reports.len(),
        outcome.reports.len() - failed,
        failed
    )
    .map_err(io_err)?;

    if let Some(path) = &a.output {
        let f = File::create(path).map_err(|e| CliError::io(path, e))?;
        let mut w = BufWriter::new(f);
        serde_json::to_writer_pretty(&mut w, &outcome.reports)
            .map_err(io::Error::from)
            .and_then(|()| writeln!(w))
            .and_then(|()| w.flush())
            .map_err(|e| CliError::io(path, e))?;
    }
    if outcome.pass {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}
