//! Closed-form right-hand sides.
//!
//! Every spectrum here is a fresh direct quadrature of `f` or `g` at the exact
//! abscissae the formula names (`u - d cot`, `-u - q`, ...); nothing is
//! interpolated. This module never touches the time-domain operators in
//! [`crate::ops`], which keeps it independent of the left-hand sides.

use alloc::vec::Vec;

use crate::grid::{SampledSignal, UniformGrid};
use crate::kernel::{sqrt_j2pi, sqrt_j_over_2pi, Angle};
use crate::math;
use crate::sum::CompensatedSum;
use crate::transform::smfrft_at;
use crate::C64;

use super::{Form, Side};

/// Transform of `f` at `us[k] + offset`.
fn spectrum_at(x: &SampledSignal, angle: &Angle, us: &[f64], sign: f64, offset: f64) -> Vec<C64> {
    let points: Vec<f64> = us.iter().map(|&u| sign * u + offset).collect();
    smfrft_at(x, &points, angle)
}

/// The conjugate-operand spectrum `F̄(v)`: the transform of `conj(f)`, i.e.
/// `F1(v) - j F2(v)` for `f = f1 + j f2`.
pub fn conj_spectrum_at(f: &SampledSignal, angle: &Angle, points: &[f64]) -> Vec<C64> {
    smfrft_at(&f.conj(), points, angle)
}

fn conj_at(f: &SampledSignal, angle: &Angle, us: &[f64], sign: f64, offset: f64) -> Vec<C64> {
    let points: Vec<f64> = us.iter().map(|&u| sign * u + offset).collect();
    conj_spectrum_at(f, angle, &points)
}

fn combine(us: &[f64], a: &[C64], b: &[C64], phase: impl Fn(f64) -> f64) -> Vec<C64> {
    let s = sqrt_j2pi();
    us.iter()
        .zip(a.iter().zip(b))
        .map(|(&u, (&x, &y))| s * math::cis(phase(u)) * x * y)
        .collect()
}

/// `sqrt(j2pi) F(u) G(u)`.
pub fn convolution(f: &SampledSignal, g: &SampledSignal, angle: &Angle, us: &[f64]) -> Vec<C64> {
    conv_tfshift(f, g, angle, 0.0, 0.0, Side::Left, us)
}

/// Left: `sqrt(j2pi) e^{-j u d + (j/2) d^2 cot} F(u - d cot) G(u)`; right swaps which
/// spectrum is displaced.
pub fn conv_shift(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    d: f64,
    side: Side,
    us: &[f64],
) -> Vec<C64> {
    conv_tfshift(f, g, angle, d, 0.0, side, us)
}

/// Left: `sqrt(j2pi) F(u - q) G(u)`; right: `sqrt(j2pi) F(u) G(u - q)`.
pub fn conv_modulation(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    q: f64,
    side: Side,
    us: &[f64],
) -> Vec<C64> {
    conv_tfshift(f, g, angle, 0.0, q, side, us)
}

/// Left: `sqrt(j2pi) e^{-j(u - q)d + (j/2) d^2 cot} F(u - q - d cot) G(u)`.
pub fn conv_tfshift(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    d: f64,
    q: f64,
    side: Side,
    us: &[f64],
) -> Vec<C64> {
    let c = angle.cot();
    let offset = -q - d * c;
    let (fv, gv) = match side {
        Side::Left => (
            spectrum_at(f, angle, us, 1.0, offset),
            spectrum_at(g, angle, us, 1.0, 0.0),
        ),
        Side::Right => (
            spectrum_at(f, angle, us, 1.0, 0.0),
            spectrum_at(g, angle, us, 1.0, offset),
        ),
    };
    combine(us, &fv, &gv, |u| -(u - q) * d + 0.5 * d * d * c)
}

/// `sqrt(j/2pi) (F * G)(u)`, the ordinary convolution in `u`, evaluated at the
/// points of `ugrid` with indices in `rows` and summed over all of `ugrid`.
///
/// `G` is evaluated directly at the lattice differences `u_k - v_m`.
pub fn product(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    ugrid: &UniformGrid,
    rows: core::ops::Range<usize>,
) -> Vec<C64> {
    let m_count = ugrid.count() as i64;
    let du = ugrid.step();
    let fv = smfrft_at(f, &ugrid.to_vec(), angle);
    let j_min = rows.start as i64 - (m_count - 1);
    let j_max = rows.end as i64 - 1;
    let diffs: Vec<f64> = (j_min..=j_max).map(|j| j as f64 * du).collect();
    let gd = smfrft_at(g, &diffs, angle);
    let scale = sqrt_j_over_2pi() * du;
    rows.map(|k| {
        let acc: CompensatedSum = fv
            .iter()
            .enumerate()
            .map(|(m, &x)| x * gd[(k as i64 - m as i64 - j_min) as usize])
            .sum();
        acc.value() * scale
    })
    .collect()
}

/// `sqrt(j2pi) F̄(-u) G(u)`.
pub fn correlation(f: &SampledSignal, g: &SampledSignal, angle: &Angle, us: &[f64]) -> Vec<C64> {
    corr_modulation(f, g, angle, 0.0, Side::Left, us)
}

/// Left: `sqrt(j2pi) e^{j u d + (j/2) d^2 cot} F̄(-u - d cot) G(u)`.
/// Right: `sqrt(j2pi) e^{-j u d + (j/2) d^2 cot} F̄(-u) G(u - d cot)`.
///
/// On the left side with a vanishing chirp rate, `Form::Paper` uses the
/// originally stated Fourier special case, whose phase is `e^{-j u d}`
/// instead of the `e^{+j u d}` the general formula specializes to.
pub fn corr_shift(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    d: f64,
    side: Side,
    form: Form,
    us: &[f64],
) -> Vec<C64> {
    let c = angle.cot();
    match side {
        Side::Left => {
            let fv = conj_at(f, angle, us, -1.0, -d * c);
            let gv = spectrum_at(g, angle, us, 1.0, 0.0);
            if form == Form::Paper && angle.is_fourier() {
                combine(us, &fv, &gv, |u| -u * d)
            } else {
                combine(us, &fv, &gv, |u| u * d + 0.5 * d * d * c)
            }
        }
        Side::Right => {
            let fv = conj_at(f, angle, us, -1.0, 0.0);
            let gv = spectrum_at(g, angle, us, 1.0, -d * c);
            combine(us, &fv, &gv, |u| -u * d + 0.5 * d * d * c)
        }
    }
}

/// Left: `sqrt(j2pi) F̄(-u - q) G(u)`; right: `sqrt(j2pi) F̄(-u) G(u - q)`.
pub fn corr_modulation(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    q: f64,
    side: Side,
    us: &[f64],
) -> Vec<C64> {
    let (fv, gv) = match side {
        Side::Left => (
            conj_at(f, angle, us, -1.0, -q),
            spectrum_at(g, angle, us, 1.0, 0.0),
        ),
        Side::Right => (
            conj_at(f, angle, us, -1.0, 0.0),
            spectrum_at(g, angle, us, 1.0, -q),
        ),
    };
    combine(us, &fv, &gv, |_| 0.0)
}

/// Combined delay and modulation.
///
/// Left, `Form::Paper` (as originally stated):
/// `sqrt(j2pi) e^{-j(u - q)d + (j/2) d^2 cot} F̄(u - q - d cot) G(u)`.
/// Left, `Form::Derived` (substitution `xi = tau - d` carried through):
/// `sqrt(j2pi) e^{j(u + q)d + (j/2) d^2 cot} F̄(-u - q - d cot) G(u)`.
/// Right (both forms): `sqrt(j2pi) e^{-j(u - q)d + (j/2) d^2 cot} F̄(-u) G(u - q - d cot)`.
#[allow(clippy::too_many_arguments)]
pub fn corr_tfshift(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    d: f64,
    q: f64,
    side: Side,
    form: Form,
    us: &[f64],
) -> Vec<C64> {
    let c = angle.cot();
    match (side, form) {
        (Side::Left, Form::Paper) => {
            let fv = conj_at(f, angle, us, 1.0, -q - d * c);
            let gv = spectrum_at(g, angle, us, 1.0, 0.0);
            combine(us, &fv, &gv, |u| -(u - q) * d + 0.5 * d * d * c)
        }
        (Side::Left, Form::Derived) => {
            let fv = conj_at(f, angle, us, -1.0, -q - d * c);
            let gv = spectrum_at(g, angle, us, 1.0, 0.0);
            combine(us, &fv, &gv, |u| (u + q) * d + 0.5 * d * d * c)
        }
        (Side::Right, _) => {
            let fv = conj_at(f, angle, us, -1.0, 0.0);
            let gv = spectrum_at(g, angle, us, 1.0, -q - d * c);
            combine(us, &fv, &gv, |u| -(u - q) * d + 0.5 * d * d * c)
        }
    }
}
