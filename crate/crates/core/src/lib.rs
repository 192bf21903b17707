//! Simplified fractional Fourier transform (Type 1) on uniformly sampled signals.
//!
//! The kernel of the simplified transform carries only an input-side chirp,
//!
//! ```text
//! K(t, u) = 1/sqrt(j 2 pi) * exp(-j t u + (j/2) t^2 cot(phi))
//! ```
//!
//! so a forward transform is a chirp multiply, an ordinary Fourier transform
//! and a constant scale. This crate provides:
//!
//! * [`grid`]: uniform grids, sampled signals, spectra and test-signal generators.
//! * [`kernel`]: validated rotation angles and pointwise kernels.
//! * [`transform`]: forward and inverse transforms, both by direct quadrature
//!   (O(N·M), the oracle) and by the chirp/FFT/scale fast path (O(N log N)).
//! * [`ops`]: shift, modulation and the chirp-weighted convolution, product
//!   and correlation operators.
//! * [`theorems`]: independent left- and right-hand sides of every spectral
//!   identity those operators satisfy, residual reports and the suite driver.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled; elementary functions then come from `libm`.
#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
pub mod fft;
pub mod grid;
pub mod kernel;
mod math;
pub mod ops;
mod sum;
pub mod theorems;
pub mod transform;

pub use error::{Error, Result};
pub use grid::{relative_l2_error, SampledSignal, Spectrum, UniformGrid};
pub use kernel::Angle;

/// Double precision complex sample.
pub type C64 = num_complex::Complex<f64>;
