//! Left-hand sides: build the time-domain operator output, then transform it.
//!
//! Nothing here evaluates a spectral product; see [`super::rhs`] for that.

use crate::grid::SampledSignal;
use crate::kernel::Angle;
use crate::ops::{
    frac_convolve, frac_correlate, frac_product, modulate, shift, shift_modulate, OperatorParams,
};
use crate::Result;

use super::IdentityId;

/// The time-domain signal whose transform is the identity's left-hand side.
///
/// In the correlation family the modulated operand enters the integrand as
/// `e^{j q tau} conj(f(tau - d))`, i.e. the phase multiplies the already
/// conjugated first operand. As a first argument of `⊙` that is
/// `M_{-q} S_d f`.
pub fn operator_output(
    id: IdentityId,
    f: &SampledSignal,
    g: &SampledSignal,
    angle: &Angle,
    params: OperatorParams,
) -> Result<SampledSignal> {
    use IdentityId::*;
    let OperatorParams { d, q } = params;
    match id {
        Conv => frac_convolve(f, g, angle),
        ConvShiftL => frac_convolve(&shift(f, d)?, g, angle),
        ConvShiftR => frac_convolve(f, &shift(g, d)?, angle),
        ConvModL => frac_convolve(&modulate(f, q), g, angle),
        ConvModR => frac_convolve(f, &modulate(g, q), angle),
        ConvTfShiftL => frac_convolve(&shift_modulate(f, params)?, g, angle),
        ConvTfShiftR => frac_convolve(f, &shift_modulate(g, params)?, angle),
        Prod => frac_product(f, g, angle),
        Corr => frac_correlate(f, g, angle),
        CorrShiftL => frac_correlate(&shift(f, d)?, g, angle),
        CorrShiftR => frac_correlate(f, &shift(g, d)?, angle),
        CorrModL => frac_correlate(&modulate(f, -q), g, angle),
        CorrModR => frac_correlate(f, &modulate(g, q), angle),
        CorrTfShiftL => frac_correlate(&modulate(&shift(f, d)?, -q), g, angle),
        CorrTfShiftR => frac_correlate(f, &shift_modulate(g, params)?, angle),
    }
}
