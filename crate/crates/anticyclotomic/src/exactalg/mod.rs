//! Exact arithmetic substrate: big rationals, integer/rational polynomials,
//! cyclotomic fields with explicit Galois action, Kronecker symbol, CRT.

pub mod arith;
pub mod cyclotomic;
pub mod intpoly;
pub mod kpoly;
pub mod ratpoly;

pub use arith::{crt, ext_gcd, inv_mod, kronecker, kronecker_i64};
pub use cyclotomic::{cyc_inv, cyc_mul, cyclotomic_poly, galois_apply, CycElem, GaloisIndex};
pub use intpoly::IntPoly;
pub use kpoly::{KPoly, QuadRat};
pub use ratpoly::RatPoly;
