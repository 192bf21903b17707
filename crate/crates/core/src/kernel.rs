//! Rotation angles and pointwise transform kernels.
//!
//! Square roots of complex constants use the principal branch throughout:
//! `sqrt(j 2 pi) = sqrt(2 pi) e^{j pi/4}` and `sqrt(j / 2 pi) = e^{j pi/4} / sqrt(2 pi)`.
//! With that choice the forward/inverse pair composes to the identity, since
//! `sqrt(j/2pi) * 2pi / sqrt(j 2pi) = 1`.

use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use crate::math;
use crate::{Error, Result, C64};

/// `|sin(phi)|` below this is treated as a multiple of pi.
pub const DEGENERATE_SIN: f64 = 1e-12;

/// `|cot(phi)|` below this is snapped to exactly zero, so `phi = pi/2`
/// evaluates the ordinary Fourier kernel without a 6e-17 residual chirp.
const COT_SNAP: f64 = 1e-15;

/// Validated rotation angle `phi`, equivalently fractional order `a = 2 phi / pi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angle {
    phi: f64,
    order: f64,
    cot: f64,
    csc: f64,
}

impl Angle {
    pub fn new(phi: f64) -> Result<Self> {
        if !phi.is_finite() {
            return Err(Error::DegenerateAngle { phi });
        }
        let s = math::sin(phi);
        if math::abs(s) < DEGENERATE_SIN {
            return Err(Error::DegenerateAngle { phi });
        }
        let mut cot = math::cos(phi) / s;
        if math::abs(cot) < COT_SNAP {
            cot = 0.0;
        }
        Ok(Self {
            phi,
            order: phi / FRAC_PI_2,
            cot,
            csc: 1.0 / s,
        })
    }

    /// `phi = order * pi / 2`.
    pub fn from_order(order: f64) -> Result<Self> {
        Self::new(order * FRAC_PI_2)
    }

    #[inline]
    pub fn phi(&self) -> f64 {
        self.phi
    }

    #[inline]
    pub fn order(&self) -> f64 {
        self.order
    }

    #[inline]
    pub fn cot(&self) -> f64 {
        self.cot
    }

    #[inline]
    pub fn csc(&self) -> f64 {
        self.csc
    }

    /// True when the chirp rate vanishes, i.e. the ordinary Fourier direction.
    #[inline]
    pub fn is_fourier(&self) -> bool {
        self.cot == 0.0
    }
}

/// `sqrt(j 2 pi)`, principal branch.
pub fn sqrt_j2pi() -> C64 {
    let r = math::sqrt(2.0 * PI);
    C64::new(r * FRAC_1_SQRT_2, r * FRAC_1_SQRT_2)
}

/// `sqrt(j / 2 pi)`, principal branch.
pub fn sqrt_j_over_2pi() -> C64 {
    let r = 1.0 / math::sqrt(2.0 * PI);
    C64::new(r * FRAC_1_SQRT_2, r * FRAC_1_SQRT_2)
}

/// `1 / sqrt(j 2 pi) = e^{-j pi/4} / sqrt(2 pi)`.
pub fn inv_sqrt_j2pi() -> C64 {
    let r = 1.0 / math::sqrt(2.0 * PI);
    C64::new(r * FRAC_1_SQRT_2, -r * FRAC_1_SQRT_2)
}

/// Input-side chirp `exp((j/2) t^2 cot(phi))`.
#[inline]
pub fn chirp_factor(t: f64, angle: &Angle) -> C64 {
    math::cis(0.5 * t * t * angle.cot)
}

/// Simplified kernel `exp(-j t u + (j/2) t^2 cot(phi)) / sqrt(j 2 pi)`.
#[inline]
pub fn smfrft_kernel(t: f64, u: f64, angle: &Angle) -> C64 {
    inv_sqrt_j2pi() * math::cis(-t * u + 0.5 * t * t * angle.cot)
}

/// Conventional fractional Fourier kernel for `phi` not a multiple of pi:
/// `sqrt((1 - j cot)/2pi) exp((j/2)(u^2 + t^2) cot - j u t csc)`.
pub fn frft_kernel(t: f64, u: f64, angle: &Angle) -> C64 {
    let amplitude = (C64::new(1.0, -angle.cot) / (2.0 * PI)).sqrt();
    amplitude * math::cis(0.5 * (u * u + t * t) * angle.cot - u * t * angle.csc)
}
