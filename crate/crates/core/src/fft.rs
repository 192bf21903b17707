//! In-place iterative radix-2 FFT.
//!
//! Forward: `X[k] = sum_n x[n] e^{-2 pi j n k / N}`; inverse is unnormalized
//! with the opposite sign. Twiddles are evaluated directly (no recurrence) so
//! their error does not grow with `N`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::math;
use crate::{Error, Result, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Precomputed twiddles for one power-of-two length.
#[derive(Debug, Clone)]
pub struct Radix2 {
    len: usize,
    twiddles: Vec<C64>,
}

impl Radix2 {
    pub fn new(len: usize) -> Result<Self> {
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::UnsupportedLength { count: len });
        }
        let twiddles = (0..len / 2)
            .map(|k| math::cis(-2.0 * PI * k as f64 / len as f64))
            .collect();
        Ok(Self { len, twiddles })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn process(&self, data: &mut [C64], direction: Direction) -> Result<()> {
        let n = self.len;
        if data.len() != n {
            return Err(Error::Shape {
                expected: n,
                found: data.len(),
            });
        }
        let bits = n.trailing_zeros();
        for i in 0..n {
            let j = i.reverse_bits() >> (usize::BITS - bits);
            if j > i {
                data.swap(i, j);
            }
        }
        let mut half = 1;
        while half < n {
            let stride = n / (2 * half);
            for block in (0..n).step_by(2 * half) {
                for k in 0..half {
                    let mut w = self.twiddles[k * stride];
                    if direction == Direction::Inverse {
                        w = w.conj();
                    }
                    let a = data[block + k];
                    let b = data[block + k + half] * w;
                    data[block + k] = a + b;
                    data[block + k + half] = a - b;
                }
            }
            half *= 2;
        }
        Ok(())
    }
}

/// One-shot forward transform.
pub fn fft(data: &mut [C64]) -> Result<()> {
    Radix2::new(data.len())?.process(data, Direction::Forward)
}

/// One-shot unnormalized inverse transform.
pub fn ifft(data: &mut [C64]) -> Result<()> {
    Radix2::new(data.len())?.process(data, Direction::Inverse)
}
