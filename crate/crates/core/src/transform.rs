//! Forward and inverse simplified transforms.
//!
//! Every quadrature is the left-point rectangle rule
//! `X(u) = dt * sum_n x[n] K(t_n, u)`. On the FFT-bin grid
//! `u_m = 2 pi m / (N dt)`, `m = -N/2 .. N/2-1`, that sum is exactly what the
//! fast path computes, so [`smfrft_direct`] is an independent oracle for
//! [`smfrft_fast`].

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::fft::{Direction, Radix2};
use crate::grid::{SampledSignal, Spectrum, UniformGrid};
use crate::kernel::{chirp_factor, frft_kernel, inv_sqrt_j2pi, sqrt_j_over_2pi, Angle};
use crate::math;
use crate::sum::CompensatedSum;
use crate::{Error, Result, C64};

/// Relative tolerance on `du * N * dt = 2 pi` for fast-path grid pairing.
pub const GRID_PAIRING_TOL: f64 = 1e-9;

/// Evaluates the forward transform of `x` by direct quadrature at arbitrary
/// abscissae `us`. Cost O(N * us.len()).
pub fn smfrft_at(x: &SampledSignal, us: &[f64], angle: &Angle) -> Vec<C64> {
    let grid = x.grid();
    let scale = inv_sqrt_j2pi() * grid.step();
    let chirped: Vec<(f64, C64)> = x
        .samples()
        .iter()
        .enumerate()
        .map(|(n, &v)| {
            let t = grid.point(n);
            (t, v * chirp_factor(t, angle))
        })
        .collect();
    us.iter()
        .map(|&u| {
            let acc: CompensatedSum = chirped
                .iter()
                .filter(|(_, v)| v.re != 0.0 || v.im != 0.0)
                .map(|&(t, v)| v * math::cis(-t * u))
                .sum();
            acc.value() * scale
        })
        .collect()
}

/// Direct-quadrature forward transform on `ugrid`.
pub fn smfrft_direct(x: &SampledSignal, ugrid: &UniformGrid, angle: &Angle) -> Spectrum {
    let values = smfrft_at(x, &ugrid.to_vec(), angle);
    Spectrum::new(*ugrid, values, *angle).expect("quadrature of finite samples is finite")
}

/// The FFT-bin frequency grid paired with a time grid:
/// `u_m = 2 pi m / (N dt)` for `m = -floor(N/2) .. N - 1 - floor(N/2)`.
///
/// Defined for any `N`; only the fast transforms need a power of two.
pub fn fft_ugrid(tgrid: &UniformGrid) -> Result<UniformGrid> {
    let n = tgrid.count();
    let du = 2.0 * PI / (n as f64 * tgrid.step());
    UniformGrid::new(-((n / 2) as f64) * du, du, n)
}

/// Fast forward transform: pre-chirp, FFT, post-scale.
///
/// The output lives on [`fft_ugrid`] in ascending order.
pub fn smfrft_fast(x: &SampledSignal, angle: &Angle) -> Result<Spectrum> {
    let tgrid = x.grid();
    let n = tgrid.count();
    let ugrid = fft_ugrid(tgrid)?;
    let plan = Radix2::new(n)?;

    let mut buf: Vec<C64> = x
        .samples()
        .iter()
        .enumerate()
        .map(|(k, &v)| v * chirp_factor(tgrid.point(k), angle))
        .collect();
    plan.process(&mut buf, Direction::Forward)?;

    let t0 = tgrid.start();
    let scale = inv_sqrt_j2pi() * tgrid.step();
    let half = n / 2;
    let values = (0..n)
        .map(|k| {
            let u = ugrid.point(k);
            // bin m = k - N/2 sits at DFT index (k + N/2) mod N
            buf[(k + half) % n] * math::cis(-t0 * u) * scale
        })
        .collect();
    Spectrum::new(ugrid, values, *angle)
}

fn check_angle(spectrum: &Spectrum, angle: &Angle) -> Result<()> {
    let expected = spectrum.angle().phi();
    if math::abs(expected - angle.phi()) > 1e-12 * (1.0 + math::abs(expected)) {
        return Err(Error::InconsistentAngle {
            expected,
            found: angle.phi(),
        });
    }
    Ok(())
}

/// Direct-quadrature inverse:
/// `x(t) = sqrt(j/2pi) e^{-(j/2) t^2 cot} du * sum_k e^{j u_k t} X[k]`.
pub fn ismfrft_direct(
    spectrum: &Spectrum,
    tgrid: &UniformGrid,
    angle: &Angle,
) -> Result<SampledSignal> {
    check_angle(spectrum, angle)?;
    let ugrid = spectrum.ugrid();
    let scale = sqrt_j_over_2pi() * ugrid.step();
    let bins: Vec<(f64, C64)> = ugrid
        .points()
        .zip(spectrum.values().iter().copied())
        .collect();
    let samples = tgrid
        .points()
        .map(|t| {
            let acc: CompensatedSum = bins.iter().map(|&(u, v)| v * math::cis(u * t)).sum();
            acc.value() * scale * chirp_factor(t, angle).conj()
        })
        .collect();
    SampledSignal::new(*tgrid, samples)
}

/// Fast inverse: exact algebraic inverse of [`smfrft_fast`] on `tgrid`.
///
/// The spectrum must sit on `fft_ugrid(tgrid)`; no interpolation is attempted.
pub fn ismfrft_fast(
    spectrum: &Spectrum,
    tgrid: &UniformGrid,
    angle: &Angle,
) -> Result<SampledSignal> {
    check_angle(spectrum, angle)?;
    let ugrid = spectrum.ugrid();
    let n = tgrid.count();
    let product = ugrid.step() * n as f64 * tgrid.step();
    let aligned = math::near_integer(ugrid.start() / ugrid.step(), GRID_PAIRING_TOL)
        == Some(-((n / 2) as i64));
    if ugrid.count() != n || math::abs(product - 2.0 * PI) > GRID_PAIRING_TOL * 2.0 * PI || !aligned
    {
        return Err(Error::GridIncompatible { product });
    }
    let plan = Radix2::new(n)?;
    let t0 = tgrid.start();
    let half = n / 2;
    let mut buf = alloc::vec![C64::new(0.0, 0.0); n];
    for (k, &v) in spectrum.values().iter().enumerate() {
        buf[(k + half) % n] = v * math::cis(ugrid.point(k) * t0);
    }
    plan.process(&mut buf, Direction::Inverse)?;
    let scale = sqrt_j_over_2pi() * ugrid.step();
    let samples = buf
        .iter()
        .enumerate()
        .map(|(k, &v)| v * scale * chirp_factor(tgrid.point(k), angle).conj())
        .collect();
    SampledSignal::new(*tgrid, samples)
}

/// Conventional fractional Fourier transform by direct quadrature (reference only).
pub fn frft_direct(x: &SampledSignal, ugrid: &UniformGrid, angle: &Angle) -> Spectrum {
    let grid = x.grid();
    let values = ugrid
        .points()
        .map(|u| {
            let acc: CompensatedSum = x
                .samples()
                .iter()
                .enumerate()
                .map(|(n, &v)| v * frft_kernel(grid.point(n), u, angle))
                .sum();
            acc.value() * grid.step()
        })
        .collect();
    Spectrum::new(*ugrid, values, *angle).expect("quadrature of finite samples is finite")
}
