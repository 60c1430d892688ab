//! Univariate polynomials over Q, used for cyclotomic inversion and exact
//! linear algebra on number-field elements.

use super::intpoly::IntPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![BigRational::zero()] }
    }

    pub fn one() -> Self {
        RatPoly { coeffs: vec![BigRational::one()] }
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly { coeffs: vec![c] }
    }

    pub fn from_int(p: &IntPoly) -> Self {
        RatPoly::new(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigRational {
        self.coeffs.last().unwrap()
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        RatPoly::new(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        RatPoly::new(out)
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, k: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn div_rem(&self, other: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!other.is_zero());
        let d = other.degree();
        if self.is_zero() || self.degree() < d {
            return (RatPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigRational::zero(); self.degree() - d + 1];
        let lead = other.leading().clone();
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let quot = &rem[i] / &lead;
            q[i - d] = quot.clone();
            for (j, oc) in other.coeffs.iter().enumerate() {
                let delta = &quot * oc;
                rem[i - d + j] -= delta;
            }
        }
        (RatPoly::new(q), RatPoly::new(rem))
    }

    /// Extended Euclid: (g, u, v) with g = u*self + v*other, g monic (or zero).
    pub fn ext_gcd(&self, other: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let (mut old_r, mut r) = (self.clone(), other.clone());
        let (mut old_s, mut s) = (RatPoly::one(), RatPoly::zero());
        let (mut old_t, mut t) = (RatPoly::zero(), RatPoly::one());
        while !r.is_zero() {
            let (q, rr) = old_r.div_rem(&r);
            old_r = std::mem::replace(&mut r, rr);
            let ns = old_s.sub(&q.mul(&s));
            old_s = std::mem::replace(&mut s, ns);
            let nt = old_t.sub(&q.mul(&t));
            old_t = std::mem::replace(&mut t, nt);
        }
        if old_r.is_zero() {
            return (old_r, old_s, old_t);
        }
        let lead = old_r.leading().clone();
        let inv = BigRational::one() / lead;
        (old_r.scale(&inv), old_s.scale(&inv), old_t.scale(&inv))
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Clear denominators: returns (primitive integer polynomial, denominator)
    /// with self = poly / den up to the content of the numerators.
    pub fn to_int_scaled(&self) -> (IntPoly, BigInt) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (IntPoly::new(ints), den)
    }

    /// True iff every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn to_int(&self) -> Option<IntPoly> {
        if !self.is_integral() {
            return None;
        }
        Some(IntPoly::new(self.coeffs.iter().map(|c| c.numer().clone()).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn ext_gcd_bezout() {
        // gcd(x^2+x+1, 1-x) over Q is 1; Bezout gives the inverse of 1-x mod Phi_3
        let phi = RatPoly::new(vec![r(1, 1), r(1, 1), r(1, 1)]);
        let f = RatPoly::new(vec![r(1, 1), r(-1, 1)]);
        let (g, _u, v) = phi.ext_gcd(&f);
        assert_eq!(g, RatPoly::one());
        // v * (1-x) = 1 mod phi; the inverse of 1 - zeta_3 is (2 + zeta_3)/3
        let (_, rem) = v.mul(&f).div_rem(&phi);
        assert_eq!(rem, RatPoly::one());
        assert_eq!(v, RatPoly::new(vec![r(2, 3), r(1, 3)]));
    }
}
