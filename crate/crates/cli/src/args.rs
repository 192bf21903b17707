use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use smfrft::theorems::IdentityId;
use smfrft::UniformGrid;

#[derive(Debug, Parser)]
#[command(
    name = "smfrft",
    version,
    about = "Simplified fractional Fourier transform toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a Gaussian or chirp test signal.
    #[command(allow_negative_numbers = true)]
    Generate(GenerateArgs),
    /// Forward transform of a signal file.
    #[command(allow_negative_numbers = true)]
    Transform(TransformArgs),
    /// Inverse transform of a spectrum file.
    #[command(allow_negative_numbers = true)]
    Invert(InvertArgs),
    /// Keep only a band of the fractional spectrum.
    #[command(allow_negative_numbers = true)]
    Filter(FilterArgs),
    /// Run the identity suite and write a JSON report.
    #[command(allow_negative_numbers = true)]
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignalKind {
    Gaussian,
    Chirp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Method {
    #[default]
    Fast,
    Direct,
}

/// Exactly one of `--angle` and `--order`.
#[derive(Debug, Clone, Copy, Args)]
#[group(required = true, multiple = false)]
pub struct AngleArgs {
    /// Rotation angle in radians.
    #[arg(long)]
    pub angle: Option<f64>,
    /// Fractional order `a`; the angle is `a * pi / 2`.
    #[arg(long)]
    pub order: Option<f64>,
}

#[derive(Debug, Clone, Copy, Args)]
#[group(required = false, multiple = false)]
pub struct OptionalAngleArgs {
    /// Check only this angle (radians).
    #[arg(long)]
    pub angle: Option<f64>,
    /// Check only the angle `a * pi / 2`.
    #[arg(long)]
    pub order: Option<f64>,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct GridArgs {
    /// First sample time.
    #[arg(long)]
    pub start: Option<f64>,
    /// Sample spacing.
    #[arg(long)]
    pub step: Option<f64>,
    /// Number of samples.
    #[arg(long)]
    pub count: Option<usize>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub kind: SignalKind,
    /// Gaussian centre.
    #[arg(long, default_value_t = 0.0)]
    pub center: f64,
    /// Envelope width (standard deviation of the Gaussian envelope).
    #[arg(long, default_value_t = 1.0)]
    pub width: f64,
    /// Gaussian carrier frequency in rad/s.
    #[arg(long, default_value_t = 0.0)]
    pub carrier: f64,
    /// Chirp rate; the chirp is compacted at the angle whose cotangent equals it.
    #[arg(long, default_value_t = 1.0)]
    pub rate: f64,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[command(flatten)]
    pub angle: AngleArgs,
    #[arg(long, value_enum, default_value_t)]
    pub method: Method,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Output frequency grid for `--method direct`, as `start:step:count`.
    /// Defaults to the FFT bin grid.
    #[arg(long, value_parser = parse_ugrid, allow_hyphen_values = true)]
    pub ugrid: Option<UniformGrid>,
}

#[derive(Debug, Args)]
pub struct InvertArgs {
    #[command(flatten)]
    pub angle: AngleArgs,
    #[arg(long, value_enum, default_value_t)]
    pub method: Method,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Output time grid. The fast method needs `count` equal to the number of
    /// spectrum rows and `step = 2pi / (count * du)`, which are the defaults;
    /// `start` defaults to the centred grid.
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args)]
pub struct FilterArgs {
    #[command(flatten)]
    pub angle: AngleArgs,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Band to keep, `lo:hi` in the transform domain (inclusive).
    #[arg(long, value_parser = parse_passband, allow_hyphen_values = true)]
    pub passband: (f64, f64),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// JSON file overriding any of the suite defaults.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Where to write the JSON report.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Use this bound for every check instead of the defaults.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Comma-separated identity names, e.g. `CONV,PROD`.
    #[arg(long, value_delimiter = ',', value_parser = parse_identity)]
    pub identities: Option<Vec<IdentityId>>,
    #[command(flatten)]
    pub angle: OptionalAngleArgs,
    #[command(flatten)]
    pub grid: GridArgs,
}

fn parse_f64(s: &str, what: &str) -> Result<f64, String> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| format!("{what} `{s}` is not a finite number"))
}

pub fn parse_ugrid(s: &str) -> Result<UniformGrid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [start, step, count] = parts[..] else {
        return Err(format!("expected start:step:count, got `{s}`"));
    };
    let count: usize = count
        .trim()
        .parse()
        .map_err(|_| format!("count `{count}` is not a non-negative integer"))?;
    UniformGrid::new(parse_f64(start, "start")?, parse_f64(step, "step")?, count)
        .map_err(|e| e.to_string())
}

pub fn parse_passband(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got `{s}`"))?;
    let (lo, hi) = (parse_f64(lo, "lower edge")?, parse_f64(hi, "upper edge")?);
    if lo >= hi {
        return Err(format!("lower edge {lo} must be below upper edge {hi}"));
    }
    Ok((lo, hi))
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    s.parse().map_err(|_| {
        let known: Vec<&str> = IdentityId::ALL.iter().map(|id| id.name()).collect();
        format!("unknown identity `{s}` (known: {})", known.join(", "))
    })
}
