//! Arbitrary-precision real and complex floating point with explicit working
//! precision in bits.

pub mod complex;
pub mod real;

pub use complex::BigComplex;
pub use real::{exp, ln, ln2, pi, sin_cos, BigFloat};
