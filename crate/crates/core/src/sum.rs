//! Neumaier-compensated complex accumulation.
//!
//! Quadrature sums here run over thousands of unimodular-phase terms; the
//! compensated form keeps their rounding error independent of the length.

use core::ops::AddAssign;

use crate::C64;

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    re: f64,
    re_c: f64,
    im: f64,
    im_c: f64,
}

#[inline]
fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if crate::math::abs(*sum) >= crate::math::abs(x) {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub(crate) fn value(&self) -> C64 {
        C64::new(self.re + self.re_c, self.im + self.im_c)
    }
}

impl AddAssign<C64> for CompensatedSum {
    #[inline]
    fn add_assign(&mut self, z: C64) {
        neumaier(&mut self.re, &mut self.re_c, z.re);
        neumaier(&mut self.im, &mut self.im_c, z.im);
    }
}

impl core::iter::Sum<C64> for CompensatedSum {
    fn sum<I: Iterator<Item = C64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for z in iter {
            acc += z;
        }
        acc
    }
}

/// Compensated sum of non-negative reals (energies, norms).
pub(crate) fn sum_f64<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    let mut s = 0.0;
    let mut c = 0.0;
    for x in iter {
        neumaier(&mut s, &mut c, x);
    }
    s + c
}
