//! Time-domain operators: shift `S_d`, modulation `M_q`, and the chirp-weighted
//! convolution, product and correlation.
//!
//! Samples of `g` that fall off the grid are zero (compact support, no
//! wrap-around) and every output lives on the input grid. The double sums are
//! O(N^2); nothing here goes through a Fourier transform.

use alloc::vec::Vec;

use crate::grid::SampledSignal;
use crate::kernel::{chirp_factor, Angle};
use crate::math;
use crate::sum::CompensatedSum;
use crate::{Error, Result, C64};

/// Delay `d` and modulation frequency `q` applied to one operand.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct OperatorParams {
    pub d: f64,
    pub q: f64,
}

/// Converts a delay to a whole number of samples.
pub fn delay_in_samples(x: &SampledSignal, d: f64) -> Result<i64> {
    let n = x.len() as i64;
    match math::near_integer(d / x.grid().step(), 1e-9) {
        Some(k) if k.abs() < n => Ok(k),
        _ => Err(Error::Alignment {
            d,
            step: x.grid().step(),
        }),
    }
}

/// `S_d x(t) = x(t - d)`; `d` must be a whole number of steps. Vacated samples are zero.
pub fn shift(x: &SampledSignal, d: f64) -> Result<SampledSignal> {
    let k = delay_in_samples(x, d)?;
    let n = x.len() as i64;
    let src = x.samples();
    let samples = (0..n)
        .map(|i| {
            let j = i - k;
            if (0..n).contains(&j) {
                src[j as usize]
            } else {
                C64::new(0.0, 0.0)
            }
        })
        .collect();
    SampledSignal::new(*x.grid(), samples)
}

/// `M_q x(t) = e^{j q t} x(t)`.
pub fn modulate(x: &SampledSignal, q: f64) -> SampledSignal {
    x.map(|t, z| z * math::cis(q * t))
}

/// `M_q S_d x`: delay first, then modulate.
pub fn shift_modulate(x: &SampledSignal, params: OperatorParams) -> Result<SampledSignal> {
    Ok(modulate(&shift(x, params.d)?, params.q))
}

/// Weighted convolution
/// `(f ⊛ g)(t) = ∫ f(tau) g(t - tau) e^{j tau (tau - t) cot} dtau`.
pub fn frac_convolve(f: &SampledSignal, g: &SampledSignal, angle: &Angle) -> Result<SampledSignal> {
    f.same_grid(g)?;
    let grid = f.grid();
    let origin = grid.origin_index()?;
    let n = grid.count() as i64;
    let dt = grid.step();
    let cot = angle.cot();
    let fs = f.samples();
    let gs = g.samples();
    let taus: Vec<f64> = grid.to_vec();

    let samples = (0..n)
        .map(|i| {
            let t = grid.point(i as usize);
            // t_i - tau_m sits at index i - m - origin of g
            let lo = (i - origin - n + 1).max(0);
            let hi = (i - origin).min(n - 1);
            let mut acc = CompensatedSum::new();
            for m in lo..=hi {
                let fm = fs[m as usize];
                let gv = gs[(i - m - origin) as usize];
                if fm.re == 0.0 && fm.im == 0.0 {
                    continue;
                }
                let tau = taus[m as usize];
                acc += fm * gv * math::cis(tau * (tau - t) * cot);
            }
            acc.value() * dt
        })
        .collect();
    SampledSignal::new(*grid, samples)
}

/// Weighted product `z(t) = f(t) g(t) e^{(j/2) t^2 cot}`.
pub fn frac_product(f: &SampledSignal, g: &SampledSignal, angle: &Angle) -> Result<SampledSignal> {
    f.same_grid(g)?;
    let gs = g.samples();
    let mut n = 0;
    Ok(f.map(|t, z| {
        let v = z * gs[n] * chirp_factor(t, angle);
        n += 1;
        v
    }))
}

/// Weighted correlation
/// `(f ⊙ g)(t) = ∫ conj(f(tau)) g(t + tau) e^{j tau (tau + t) cot} dtau`.
pub fn frac_correlate(
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
) -> Result<SampledSignal> {
    f.same_grid(g)?;
    let grid = f.grid();
    let origin = grid.origin_index()?;
    let n = grid.count() as i64;
    let dt = grid.step();
    let cot = angle.cot();
    let fs = f.samples();
    let gs = g.samples();
    let taus: Vec<f64> = grid.to_vec();

    let samples = (0..n)
        .map(|i| {
            let t = grid.point(i as usize);
            // t_i + tau_m sits at index i + m + origin of g
            let lo = (-i - origin).max(0);
            let hi = (n - 1 - i - origin).min(n - 1);
            let mut acc = CompensatedSum::new();
            for m in lo..=hi {
                let fm = fs[m as usize];
                if fm.re == 0.0 && fm.im == 0.0 {
                    continue;
                }
                let gv = gs[(i + m + origin) as usize];
                let tau = taus[m as usize];
                acc += fm.conj() * gv * math::cis(tau * (tau + t) * cot);
            }
            acc.value() * dt
        })
        .collect();
    SampledSignal::new(*grid, samples)
}
