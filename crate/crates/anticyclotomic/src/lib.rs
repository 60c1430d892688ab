//! Defining polynomials for layers of the anticyclotomic Z_3-extension of an
//! imaginary quadratic field in which 3 ramifies, computed by two independent
//! routes: a complex-multiplication (ring class field) pipeline over class
//! groups of nonmaximal orders, and an exact Kummer-theory pipeline through
//! cyclotomic units. The two routes cross-verify each other through exact
//! field-membership certificates.

pub mod bigfloat;
pub mod error;
pub mod exactalg;
pub mod quadforms;
pub mod realquad;

pub use error::{Error, Result};
