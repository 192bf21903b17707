//! `t,re,im` / `u,re,im` files.
//!
//! Numbers are written in Rust's shortest round-trip form, so reading a file
//! back and writing it again reproduces it byte for byte. The abscissa column
//! must be uniformly spaced; its grid is recovered exactly when the file was
//! written by this crate.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use smfrft::{SampledSignal, Spectrum, UniformGrid, C64};

use crate::error::CliError;

/// Relative deviation of a spacing from the mean spacing still accepted as uniform.
pub const UNIFORMITY_TOL: f64 = 1e-9;

const ULP_SEARCH: u64 = 16;

/// Abscissa column name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Time,
    Frequency,
}

impl Axis {
    fn name(self) -> &'static str {
        match self {
            Axis::Time => "t",
            Axis::Frequency => "u",
        }
    }
}

pub fn write_columns<W: Write>(
    out: W,
    axis: Axis,
    grid: &UniformGrid,
    values: &[C64],
) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record([axis.name(), "re", "im"])?;
    for (x, v) in grid.points().zip(values) {
        w.write_record([
            format!("{x:?}"),
            format!("{:?}", v.re),
            format!("{:?}", v.im),
        ])?;
    }
    w.flush()
}

/// Parsed file before the abscissa has been turned into a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Columns {
    pub abscissa: Vec<f64>,
    pub values: Vec<C64>,
}

pub fn read_columns<R: Read>(input: R, axis: Axis, path: &Path) -> Result<Columns, CliError> {
    let parse_err = |line: u64, message: String| CliError::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut r = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(input);
    let header = r
        .headers()
        .map_err(|e| parse_err(1, e.to_string()))?
        .clone();
    let expected = [axis.name(), "re", "im"];
    if header.iter().ne(expected) {
        return Err(parse_err(
            1,
            format!(
                "expected header `{}`, found `{}`",
                expected.join(","),
                header.iter().collect::<Vec<_>>().join(",")
            ),
        ));
    }

    let mut cols = Columns {
        abscissa: Vec::new(),
        values: Vec::new(),
    };
    for rec in r.records() {
        let rec = rec.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_err(line, e.to_string())
        })?;
        let line = rec.position().map_or(0, |p| p.line());
        let mut nums = [0.0; 3];
        for (i, slot) in nums.iter_mut().enumerate() {
            let field = &rec[i];
            *slot = field
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| {
                    parse_err(
                        line,
                        format!("column `{}`: `{field}` is not a finite number", expected[i]),
                    )
                })?;
        }
        cols.abscissa.push(nums[0]);
        cols.values.push(C64::new(nums[1], nums[2]));
    }
    Ok(cols)
}

/// Recovers the uniform grid behind an abscissa column.
///
/// Tries steps within a few ulps of the mean spacing and returns the first
/// one that reproduces every value exactly; otherwise accepts the mean
/// spacing if every gap is within [`UNIFORMITY_TOL`] of the median gap.
pub fn infer_grid(xs: &[f64], path: &Path) -> Result<UniformGrid, CliError> {
    let parse_err = |line: u64, message: String| CliError::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let n = xs.len();
    if n < 2 {
        return Err(parse_err(
            n as u64 + 1,
            format!("need at least two rows, found {n}"),
        ));
    }
    let start = xs[0];
    let mean = (xs[n - 1] - start) / (n - 1) as f64;
    if mean.is_nan() || mean <= 0.0 {
        return Err(parse_err(3, "abscissa must be strictly increasing".into()));
    }

    let exact = |step: f64| {
        xs.iter()
            .enumerate()
            .all(|(k, &x)| start + k as f64 * step == x)
    };
    let bits = mean.to_bits();
    let candidates = (0..=ULP_SEARCH).flat_map(|i| [bits + i, bits.saturating_sub(i)]);
    if let Some(step) = candidates.map(f64::from_bits).find(|&s| exact(s)) {
        return Ok(UniformGrid::new(start, step, n)?);
    }

    let mut gaps: Vec<f64> = xs.windows(2).map(|p| p[1] - p[0]).collect();
    gaps.sort_by(f64::total_cmp);
    let median = gaps[gaps.len() / 2];
    for (k, pair) in xs.windows(2).enumerate() {
        let gap = pair[1] - pair[0];
        if (gap - median).abs() > UNIFORMITY_TOL * median {
            // header is line 1, first data row line 2
            return Err(parse_err(
                k as u64 + 3,
                format!("non-uniform spacing: gap {gap:?} differs from typical spacing {median:?}"),
            ));
        }
    }
    Ok(UniformGrid::new(start, mean, n)?)
}

fn open(path: &Path) -> Result<File, CliError> {
    File::open(path).map_err(|e| CliError::io(path, e))
}

pub fn read_signal(path: &Path) -> Result<SampledSignal, CliError> {
    let cols = read_columns(open(path)?, Axis::Time, path)?;
    let grid = infer_grid(&cols.abscissa, path)?;
    Ok(SampledSignal::new(grid, cols.values)?)
}

/// Reads a `u,re,im` file. The angle is not stored in the file.
pub fn read_spectrum(path: &Path) -> Result<(UniformGrid, Vec<C64>), CliError> {
    let cols = read_columns(open(path)?, Axis::Frequency, path)?;
    let grid = infer_grid(&cols.abscissa, path)?;
    Ok((grid, cols.values))
}

/// Writes to `path`, or to standard output when `path` is `None`.
pub fn write_to(
    path: Option<&Path>,
    axis: Axis,
    grid: &UniformGrid,
    values: &[C64],
) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let f = File::create(p).map_err(|e| CliError::io(p, e))?;
            write_columns(BufWriter::new(f), axis, grid, values).map_err(|e| CliError::io(p, e))
        }
        None => {
            let stdout = io::stdout();
            write_columns(stdout.lock(), axis, grid, values)
                .map_err(|e| CliError::io(PathBuf::from("<stdout>"), e))
        }
    }
}

pub fn write_signal(path: Option<&Path>, x: &SampledSignal) -> Result<(), CliError> {
    write_to(path, Axis::Time, x.grid(), x.samples())
}

pub fn write_spectrum(path: Option<&Path>, s: &Spectrum) -> Result<(), CliError> {
    write_to(path, Axis::Frequency, s.ugrid(), s.values())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> &'static Path {
        Path::new("test.csv")
    }

    #[test]
    fn writes_shortest_round_trip_numbers() {
        let g = UniformGrid::new(-1.0, 0.5, 3).unwrap();
        let v = [
            C64::new(1.0, -0.0),
            C64::new(0.1, 1e-300),
            C64::new(-2.5e20, 3.0),
        ];
        let mut buf = Vec::new();
        write_columns(&mut buf, Axis::Time, &g, &v).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "t,re,im\n-1.0,1.0,-0.0\n-0.5,0.1,1e-300\n0.0,-2.5e20,3.0\n"
        );
    }

    #[test]
    fn recovers_exact_grid() {
        for (start, step, n) in [
            (-16.0, 1.0 / 64.0, 2048),
            (-3.3, 0.1, 77),
            (0.0, 2.0 * std::f64::consts::PI / 2048.0 / 0.015625, 2048),
        ] {
            let g = UniformGrid::new(start, step, n).unwrap();
            assert_eq!(infer_grid(&g.to_vec(), p()).unwrap(), g);
        }
    }

    #[test]
    fn accepts_nearly_uniform_and_rejects_irregular() {
        let mut xs: Vec<f64> = (0..10).map(|k| k as f64 * 0.1).collect();
        xs[4] += 1e-13;
        let g = infer_grid(&xs, p()).unwrap();
        assert_eq!(g.count(), 10);
        xs[4] += 1e-3;
        match infer_grid(&xs, p()) {
            Err(CliError::Parse { line, .. }) => assert_eq!(line, 6),
            other => panic!("{other:?}"),
        }
        assert!(infer_grid(&[1.0], p()).is_err());
        assert!(infer_grid(&[1.0, 0.0], p()).is_err());
    }

    #[test]
    fn reports_offending_line() {
        let text = "t,re,im\n0.0,1.0,0.0\n0.5,abc,0.0\n";
        match read_columns(text.as_bytes(), Axis::Time, p()) {
            Err(CliError::Parse { line, message, .. }) => {
                assert_eq!(line, 3);
                assert!(message.contains("`re`"), "{message}");
            }
            other => panic!("{other:?}"),
        }
        let text = "u,re,im\n0.0,1.0,0.0\n";
        assert!(read_columns(text.as_bytes(), Axis::Time, p()).is_err());
        let text = "t,re,im\n0.0,1.0\n";
        assert!(read_columns(text.as_bytes(), Axis::Time, p()).is_err());
        let text = "t,re,im\n0.0,NaN,0.0\n";
        assert!(read_columns(text.as_bytes(), Axis::Time, p()).is_err());
    }

    #[test]
    fn write_read_write_is_stable() {
        let g = UniformGrid::new(-16.0, 1.0 / 64.0, 2048).unwrap();
        let x = smfrft::grid::chirp(&g, 0.7, 1.3).unwrap();
        let mut first = Vec::new();
        write_columns(&mut first, Axis::Time, x.grid(), x.samples()).unwrap();
        let cols = read_columns(first.as_slice(), Axis::Time, p()).unwrap();
        let g2 = infer_grid(&cols.abscissa, p()).unwrap();
        let mut second = Vec::new();
        write_columns(&mut second, Axis::Time, &g2, &cols.values).unwrap();
        assert_eq!(first, second);
    }
}
