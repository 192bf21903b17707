//! Elementary functions routed through `num_traits::Float` so they resolve to
//! `std` or `libm` depending on the build.

use num_traits::Float;

use crate::C64;

#[inline]
pub(crate) fn cis(theta: f64) -> C64 {
    let (s, c) = Float::sin_cos(theta);
    C64::new(c, s)
}

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    Float::sqrt(x)
}

#[inline]
pub(crate) fn exp(x: f64) -> f64 {
    Float::exp(x)
}

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    Float::abs(x)
}

#[inline]
pub(crate) fn round(x: f64) -> f64 {
    Float::round(x)
}

#[inline]
pub(crate) fn sin(x: f64) -> f64 {
    Float::sin(x)
}

#[inline]
pub(crate) fn cos(x: f64) -> f64 {
    Float::cos(x)
}

/// Returns `Some(k)` when `x` is within `rel_tol` (relative to `max(1, |x|)`)
/// of the integer `k`.
pub(crate) fn near_integer(x: f64, rel_tol: f64) -> Option<i64> {
    if !x.is_finite() {
        return None;
    }
    let k = round(x);
    let scale = if abs(x) > 1.0 { abs(x) } else { 1.0 };
    if abs(x - k) <= rel_tol * scale {
        Some(k as i64)
    } else {
        None
    }
}
