//! Uniform grids, sampled signals, spectra and the standard test signals.
//!
//! A [`SampledSignal`] is zero outside its grid. All values are finite double
//! precision complex numbers; every constructor checks this.

use alloc::vec::Vec;

use crate::kernel::Angle;
use crate::math;
use crate::sum::sum_f64;
use crate::{Error, Result, C64};

/// Evenly spaced axis `start + k * step`, `0 <= k < count`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct UniformGrid {
    start: f64,
    step: f64,
    count: usize,
}

impl UniformGrid {
    pub fn new(start: f64, step: f64, count: usize) -> Result<Self> {
        let last = start + (count.saturating_sub(1) as f64) * step;
        if !start.is_finite() || !step.is_finite() || step <= 0.0 || count < 2 || !last.is_finite()
        {
            return Err(Error::InvalidGrid { start, step, count });
        }
        Ok(Self { start, step, count })
    }

    /// Grid of `count` points with step `span / count` starting at `-span / 2`.
    pub fn centered(span: f64, count: usize) -> Result<Self> {
        Self::new(-span / 2.0, span / count as f64, count)
    }

    #[inline]
    pub fn start(&self) -> f64 {
        self.start
    }

    #[inline]
    pub fn step(&self) -> f64 {
        self.step
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.count
    }

    #[inline]
    pub fn point(&self, k: usize) -> f64 {
        self.start + k as f64 * self.step
    }

    pub fn last(&self) -> f64 {
        self.point(self.count - 1)
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.count).map(move |k| self.point(k))
    }

    pub fn to_vec(&self) -> Vec<f64> {
        self.points().collect()
    }

    /// The start expressed in steps, if it is an integer.
    ///
    /// Operators that evaluate `g(t - tau)` on the sample lattice need this.
    pub(crate) fn origin_index(&self) -> Result<i64> {
        math::near_integer(self.start / self.step, 1e-9).ok_or(Error::OffLatticeOrigin {
            start: self.start,
            step: self.step,
        })
    }
}

fn check_finite(values: &[C64]) -> Result<()> {
    match values
        .iter()
        .position(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        Some(index) => Err(Error::NonFinite { index }),
        None => Ok(()),
    }
}

/// Complex samples of x(t) on a time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    grid: UniformGrid,
    samples: Vec<C64>,
}

impl SampledSignal {
    pub fn new(grid: UniformGrid, samples: Vec<C64>) -> Result<Self> {
        if samples.len() != grid.count() {
            return Err(Error::Shape {
                expected: grid.count(),
                found: samples.len(),
            });
        }
        check_finite(&samples)?;
        Ok(Self { grid, samples })
    }

    pub fn zeros(grid: UniformGrid) -> Self {
        Self {
            grid,
            samples: alloc::vec![C64::new(0.0, 0.0); grid.count()],
        }
    }

    /// Builds the signal from a function of `t`. Panics on non-finite output.
    pub fn from_fn(grid: UniformGrid, mut f: impl FnMut(f64) -> C64) -> Self {
        let samples = grid.points().map(&mut f).collect();
        Self::new(grid, samples).expect("generator produced a non-finite sample")
    }

    #[inline]
    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    #[inline]
    pub fn samples(&self) -> &[C64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<C64> {
        self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// `dt * sum |x_n|^2`.
    pub fn energy(&self) -> f64 {
        self.grid.step() * sum_f64(self.samples.iter().map(|z| z.norm_sqr()))
    }

    pub fn conj(&self) -> Self {
        self.map(|_, z| z.conj())
    }

    /// Applies `f(t_n, x_n)` to every sample, keeping the grid.
    pub fn map(&self, mut f: impl FnMut(f64, C64) -> C64) -> Self {
        let samples = self
            .samples
            .iter()
            .enumerate()
            .map(|(n, &z)| f(self.grid.point(n), z))
            .collect();
        Self {
            grid: self.grid,
            samples,
        }
    }

    pub(crate) fn same_grid(&self, other: &Self) -> Result<()> {
        if self.grid == other.grid {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }
}

/// Samples of a transform on a fractional-frequency grid, tagged with the
/// angle they were computed at.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    ugrid: UniformGrid,
    values: Vec<C64>,
    angle: Angle,
}

impl Spectrum {
    pub fn new(ugrid: UniformGrid, values: Vec<C64>, angle: Angle) -> Result<Self> {
        if values.len() != ugrid.count() {
            return Err(Error::Shape {
                expected: ugrid.count(),
                found: values.len(),
            });
        }
        check_finite(&values)?;
        Ok(Self {
            ugrid,
            values,
            angle,
        })
    }

    #[inline]
    pub fn ugrid(&self) -> &UniformGrid {
        &self.ugrid
    }

    #[inline]
    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [C64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<C64> {
        self.values
    }

    #[inline]
    pub fn angle(&self) -> Angle {
        self.angle
    }

    /// `du * sum |X_k|^2`.
    pub fn energy(&self) -> f64 {
        self.ugrid.step() * sum_f64(self.values.iter().map(|z| z.norm_sqr()))
    }
}

/// `exp(-(t - center)^2 / (2 width^2)) * exp(j carrier t)`.
pub fn gaussian(
    grid: &UniformGrid,
    center: f64,
    width: f64,
    carrier: f64,
) -> Result<SampledSignal> {
    if width.is_nan() || width <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "width",
            value: width,
        });
    }
    if !center.is_finite() {
        return Err(Error::InvalidParameter {
            name: "center",
            value: center,
        });
    }
    if !carrier.is_finite() {
        return Err(Error::InvalidParameter {
            name: "carrier",
            value: carrier,
        });
    }
    let samples = grid
        .points()
        .map(|t| {
            let s = (t - center) / width;
            math::cis(carrier * t) * math::exp(-0.5 * s * s)
        })
        .collect();
    SampledSignal::new(*grid, samples)
}

/// Gaussian-enveloped linear chirp `exp(-t^2 / (2 w^2)) * exp(-j rate t^2 / 2)`.
///
/// An infinite `envelope_width` gives the bare unimodular chirp.
pub fn chirp(grid: &UniformGrid, rate: f64, envelope_width: f64) -> Result<SampledSignal> {
    if envelope_width.is_nan() || envelope_width <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "envelope_width",
            value: envelope_width,
        });
    }
    if !rate.is_finite() {
        return Err(Error::InvalidParameter {
            name: "rate",
            value: rate,
        });
    }
    let samples = grid
        .points()
        .map(|t| {
            let s = t / envelope_width;
            math::cis(-0.5 * rate * t * t) * math::exp(-0.5 * s * s)
        })
        .collect();
    SampledSignal::new(*grid, samples)
}

/// Declarative description of a test signal, sampled on demand.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "lowercase"))]
pub enum SignalSpec {
    Gaussian {
        center: f64,
        width: f64,
        carrier: f64,
    },
    Chirp {
        rate: f64,
        width: f64,
    },
}

impl SignalSpec {
    pub fn sample(&self, grid: &UniformGrid) -> Result<SampledSignal> {
        match *self {
            SignalSpec::Gaussian {
                center,
                width,
                carrier,
            } => gaussian(grid, center, width, carrier),
            SignalSpec::Chirp { rate, width } => chirp(grid, rate, width),
        }
    }
}

fn l2_norm(v: impl Iterator<Item = C64>) -> f64 {
    math::sqrt(sum_f64(v.map(|z| z.norm_sqr())))
}

/// `||a - b||_2 / ||b||_2`.
pub fn relative_l2_error(a: &[C64], b: &[C64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Shape {
            expected: b.len(),
            found: a.len(),
        });
    }
    if b.is_empty() {
        return Err(Error::Shape {
            expected: 1,
            found: 0,
        });
    }
    let reference = l2_norm(b.iter().copied());
    if reference == 0.0 {
        return Err(Error::DegenerateReference);
    }
    Ok(l2_norm(a.iter().zip(b).map(|(x, y)| x - y)) / reference)
}

/// `||a - b||_2` without normalization; the fallback when the reference is zero.
pub fn absolute_l2_error(a: &[C64], b: &[C64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Shape {
            expected: b.len(),
            found: a.len(),
        });
    }
    Ok(l2_norm(a.iter().zip(b).map(|(x, y)| x - y)))
}
