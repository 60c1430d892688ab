//! Exact arithmetic in cyclotomic fields Q(zeta_m) on the power basis
//! 1, zeta, ..., zeta^(phi(m)-1) modulo the m-th cyclotomic polynomial,
//! with the explicit Galois action zeta -> zeta^b.

use super::arith::euler_phi;
use super::intpoly::IntPoly;
use super::ratpoly::RatPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Cached data for one cyclotomic field.
#[derive(Debug)]
pub struct CycField {
    pub m: u64,
    pub phi: usize,
    /// coefficients of Phi_m, ascending, length phi+1, monic
    pub poly: Vec<BigInt>,
}

fn field_cache() -> &'static Mutex<HashMap<u64, Arc<CycField>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycField>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The m-th cyclotomic polynomial, computed by exact division of x^m - 1 by
/// the cyclotomic polynomials of the proper divisors of m.
pub fn cyclotomic_poly(m: u64) -> IntPoly {
    assert!(m >= 1);
    let f = cyc_field(m);
    IntPoly::new(f.poly.clone())
}

pub fn cyc_field(m: u64) -> Arc<CycField> {
    {
        let cache = field_cache().lock().unwrap();
        if let Some(f) = cache.get(&m) {
            return f.clone();
        }
    }
    let poly = compute_cyclotomic(m);
    let phi = euler_phi(m) as usize;
    debug_assert_eq!(poly.degree(), phi);
    let field = Arc::new(CycField { m, phi, poly: poly.coeffs().to_vec() });
    field_cache().lock().unwrap().insert(m, field.clone());
    field
}

fn compute_cyclotomic(m: u64) -> IntPoly {
    if m == 1 {
        return IntPoly::from_i64(&[-1, 1]);
    }
    // x^m - 1
    let mut xm1 = vec![BigInt::zero(); m as usize + 1];
    xm1[0] = -BigInt::one();
    xm1[m as usize] = BigInt::one();
    let mut num = IntPoly::new(xm1);
    for d in 1..m {
        if m % d == 0 {
            num = num.div_exact(&cyclotomic_poly(d));
        }
    }
    num
}

/// An exact element of Q(zeta_m): rational vector of length phi(m) held as an
/// integer numerator vector with a single positive denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycElem {
    pub m: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycElem {
    fn normalized(m: u64, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        assert!(!den.is_zero());
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -c.clone();
            }
        }
        let mut g = den.clone();
        for c in &num {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if !g.is_one() && !g.is_zero() {
            den /= &g;
            for c in num.iter_mut() {
                *c = &*c / &g;
            }
        }
        if num.iter().all(|c| c.is_zero()) {
            den = BigInt::one();
        }
        CycElem { m, num, den }
    }

    pub fn zero(m: u64) -> Self {
        let phi = euler_phi(m) as usize;
        CycElem { m, num: vec![BigInt::zero(); phi], den: BigInt::one() }
    }

    pub fn one(m: u64) -> Self {
        let mut e = CycElem::zero(m);
        e.num[0] = BigInt::one();
        e
    }

    pub fn from_rational(m: u64, q: &BigRational) -> Self {
        let mut e = CycElem::zero(m);
        e.num[0] = q.numer().clone();
        e.den = q.denom().clone();
        CycElem::normalized(m, e.num, e.den)
    }

    pub fn from_integer(m: u64, n: &BigInt) -> Self {
        let mut e = CycElem::zero(m);
        e.num[0] = n.clone();
        e
    }

    /// zeta_m^k as an element (k arbitrary, taken mod m).
    pub fn zeta_pow(m: u64, k: i64) -> Self {
        let f = cyc_field(m);
        let kk = k.rem_euclid(m as i64) as usize;
        let mut raw = vec![BigInt::zero(); kk + 1];
        raw[kk] = BigInt::one();
        let num = reduce_mod_phi(&f, raw);
        CycElem::normalized(m, num, BigInt::one())
    }

    /// 1 - zeta_m^a (a nonzero mod m).
    pub fn one_minus_zeta(m: u64, a: u64) -> Self {
        let e = CycElem::zeta_pow(m, a as i64);
        CycElem::one(m).sub(&e)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        BigRational::new(self.num[i].clone(), self.den.clone())
    }

    pub fn num(&self) -> &[BigInt] {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn add(&self, o: &CycElem) -> CycElem {
        assert_eq!(self.m, o.m);
        let den = num_integer::Integer::lcm(&self.den, &o.den);
        let fa = &den / &self.den;
        let fb = &den / &o.den;
        let num = self
            .num
            .iter()
            .zip(&o.num)
            .map(|(a, b)| a * &fa + b * &fb)
            .collect();
        CycElem::normalized(self.m, num, den)
    }

    pub fn sub(&self, o: &CycElem) -> CycElem {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> CycElem {
        CycElem {
            m: self.m,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> CycElem {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        CycElem::normalized(self.m, num, &self.den * q.denom())
    }

    pub fn mul(&self, o: &CycElem) -> CycElem {
        assert_eq!(self.m, o.m);
        let f = cyc_field(self.m);
        let n = f.phi;
        let mut raw = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        let num = reduce_mod_phi(&f, raw);
        CycElem::normalized(self.m, num, &self.den * &o.den)
    }

    pub fn pow(&self, e: u32) -> CycElem {
        let mut acc = CycElem::one(self.m);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via extended Euclid against Phi_m over Q.
    pub fn inv(&self) -> Result<CycElem> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let f = cyc_field(self.m);
        let phi_poly = RatPoly::from_int(&IntPoly::new(f.poly.clone()));
        let me = RatPoly::new(self.num.iter().map(|c| BigRational::from_integer(c.clone())).collect());
        let (g, _u, v) = phi_poly.ext_gcd(&me);
        if g != RatPoly::one() {
            return Err(Error::ZeroDivisor);
        }
        // v * self/den = 1 mod Phi  ->  inverse = v * den
        let mut num = vec![BigInt::zero(); f.phi];
        let mut den = BigInt::one();
        for c in v.coeffs() {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        for (i, c) in v.coeffs().iter().enumerate() {
            num[i] = c.numer() * (&den / c.denom()) * &self.den;
        }
        Ok(CycElem::normalized(self.m, num, den))
    }

    /// Image under zeta -> zeta^b; requires gcd(b, m) = 1.
    pub fn galois(&self, b: u64) -> Result<CycElem> {
        let bb = b % self.m;
        if BigInt::from(bb).gcd(&BigInt::from(self.m)) != BigInt::one() {
            return Err(Error::BadGaloisIndex(b, self.m));
        }
        let f = cyc_field(self.m);
        let mut raw = vec![BigInt::zero(); self.m as usize];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = ((i as u64 * bb) % self.m) as usize;
            raw[idx] += c;
        }
        let num = reduce_mod_phi(&f, raw);
        Ok(CycElem::normalized(self.m, num, self.den.clone()))
    }

    /// If self = r * other for a single rational r, return it.
    pub fn rational_ratio(&self, other: &CycElem) -> Option<BigRational> {
        assert_eq!(self.m, other.m);
        if other.is_zero() {
            return None;
        }
        let j = other.num.iter().position(|c| !c.is_zero())?;
        // r = (num_self[j]/den_self) / (num_other[j]/den_other)
        if self.num[j].is_zero() && !self.is_zero() {
            return None;
        }
        let r = BigRational::new(self.num[j].clone() * &other.den, other.num[j].clone() * &self.den);
        // verify proportionality exactly
        let check = other.scale(&r);
        if check == *self {
            Some(r)
        } else {
            None
        }
    }

    /// Exact inverse of (1 - zeta_m^a), using that Phi_k(x) - Phi_k(1) is
    /// divisible by x - 1. Cheap: no Euclid. a must be nonzero mod m.
    pub fn inv_one_minus_zeta(m: u64, a: u64) -> Result<CycElem> {
        let am = a % m;
        if am == 0 {
            return Err(Error::ZeroDivisor);
        }
        let g = BigInt::from(am).gcd(&BigInt::from(m)).to_string().parse::<u64>().unwrap();
        let mp = m / g; // level of the primitive root zeta_m^a = zeta_mp^(a/g)
        let phi_mp = cyclotomic_poly(mp);
        // S(x) = (Phi_mp(x) - Phi_mp(1)) / (x - 1); then (1-y) * S(y) = Phi_mp(1)
        // for y any primitive mp-th root of unity.
        let c1 = phi_mp.eval(&BigInt::one());
        let shifted = phi_mp.sub(&IntPoly::constant(c1.clone()));
        let s = shifted.div_exact(&IntPoly::from_i64(&[-1, 1]));
        // evaluate -S at zeta_m^a: numerator of the inverse is -S, since
        // (1 - y) S(y) = -(y - 1) S(y) = -(Phi(y) - Phi(1)) = Phi(1) at roots y.
        let f = cyc_field(m);
        let mut raw = vec![BigInt::zero(); m as usize];
        for (j, c) in s.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = ((j as u64 * am) % m) as usize;
            raw[idx] += c;
        }
        let num = reduce_mod_phi(&f, raw);
        if c1.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(CycElem::normalized(m, num, c1))
    }
}

/// Reduce a raw coefficient vector (any length) modulo Phi_m; returns a
/// vector of length exactly phi(m).
fn reduce_mod_phi(f: &CycField, mut raw: Vec<BigInt>) -> Vec<BigInt> {
    let n = f.phi;
    if raw.len() < n {
        raw.resize(n, BigInt::zero());
        return raw;
    }
    for i in (n..raw.len()).rev() {
        if raw[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut raw[i], BigInt::zero());
        for (j, pc) in f.poly.iter().enumerate().take(n) {
            if pc.is_zero() {
                continue;
            }
            let delta = &c * pc;
            raw[i - n + j] -= delta;
        }
    }
    raw.truncate(n);
    raw.resize(n, BigInt::zero());
    raw
}

/// Spec-level free functions.
pub fn cyc_mul(a: &CycElem, b: &CycElem) -> CycElem {
    a.mul(b)
}

pub fn cyc_inv(a: &CycElem) -> Result<CycElem> {
    a.inv()
}

/// Galois automorphism index b in (Z/m)^*.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaloisIndex(pub u64);

pub fn galois_apply(s: GaloisIndex, a: &CycElem) -> Result<CycElem> {
    a.galois(s.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic_poly(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(3), IntPoly::from_i64(&[1, 1, 1]));
        // derived: divide x^9-1 by Phi_1 * Phi_3
        let x9m1 = {
            let mut v = vec![BigInt::zero(); 10];
            v[0] = -BigInt::one();
            v[9] = BigInt::one();
            IntPoly::new(v)
        };
        let expect = x9m1.div_exact(&cyclotomic_poly(1)).div_exact(&cyclotomic_poly(3));
        assert_eq!(cyclotomic_poly(9), expect);
        assert_eq!(cyclotomic_poly(9), IntPoly::from_i64(&[1, 0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn zeta3_arithmetic() {
        // zeta_3 * zeta_3^2 = 1
        let z = CycElem::zeta_pow(3, 1);
        let z2 = CycElem::zeta_pow(3, 2);
        assert_eq!(z.mul(&z2), CycElem::one(3));
        // inverse of 1 - zeta_3 is (2 + zeta_3)/3
        let e = CycElem::one_minus_zeta(3, 1);
        let inv = e.inv().unwrap();
        assert_eq!(inv.coeff(0), BigRational::new(BigInt::from(2), BigInt::from(3)));
        assert_eq!(inv.coeff(1), BigRational::new(BigInt::from(1), BigInt::from(3)));
        assert_eq!(e.mul(&inv), CycElem::one(3));
        // identity
        let a = CycElem::zeta_pow(3, 1).add(&CycElem::from_integer(3, &BigInt::from(5)));
        assert_eq!(a.mul(&CycElem::one(3)), a);
    }

    #[test]
    fn fast_inverse_matches_euclid() {
        for m in [7u64, 9, 12, 87, 29] {
            for a in 1..m {
                let e = CycElem::one_minus_zeta(m, a);
                if e.is_zero() {
                    continue;
                }
                let i1 = e.inv().unwrap();
                let i2 = CycElem::inv_one_minus_zeta(m, a).unwrap();
                assert_eq!(i1, i2, "m={} a={}", m, a);
                assert_eq!(e.mul(&i2), CycElem::one(m));
            }
        }
    }

    #[test]
    fn galois_action() {
        // b = 1 is the identity
        let a = CycElem::zeta_pow(9, 4).add(&CycElem::from_integer(9, &BigInt::from(2)));
        assert_eq!(a.galois(1).unwrap(), a);
        // conjugation in Q(zeta_3): zeta -> zeta^2 = -1 - zeta
        let z = CycElem::zeta_pow(3, 1);
        let c = z.galois(2).unwrap();
        assert_eq!(c, CycElem::zeta_pow(3, 2));
        assert_eq!(c.coeff(0), BigRational::from_integer(BigInt::from(-1)));
        assert_eq!(c.coeff(1), BigRational::from_integer(BigInt::from(-1)));
        // composition law on a sample element
        let a = CycElem::zeta_pow(29, 7)
            .add(&CycElem::zeta_pow(29, 3).scale(&BigRational::new(2.into(), 5.into())));
        let b1 = a.galois(4).unwrap().galois(9).unwrap();
        let b2 = a.galois(36 % 29).unwrap();
        assert_eq!(b1, b2);
        // constants fixed by every automorphism
        let c = CycElem::from_rational(29, &BigRational::new(22.into(), 7.into()));
        for b in 1..29 {
            assert_eq!(c.galois(b).unwrap(), c);
        }
        // non-coprime index rejected
        assert!(CycElem::zeta_pow(9, 1).galois(3).is_err());
    }

    #[test]
    fn phi_m_annihilates_zeta() {
        for m in [3u64, 9, 12, 29, 87] {
            let f = cyclotomic_poly(m);
            let mut acc = CycElem::zero(m);
            let z = CycElem::zeta_pow(m, 1);
            let mut p = CycElem::one(m);
            for c in f.coeffs() {
                acc = acc.add(&p.scale(&BigRational::from_integer(c.clone())));
                p = p.mul(&z);
            }
            assert!(acc.is_zero(), "Phi_{}(zeta) != 0", m);
        }
    }

    #[test]
    fn rational_ratio_detects() {
        let m = 9;
        let a = CycElem::zeta_pow(m, 2).add(&CycElem::zeta_pow(m, 5));
        let r = BigRational::new(BigInt::from(-7), BigInt::from(3));
        let b = a.scale(&r);
        assert_eq!(b.rational_ratio(&a), Some(r));
        let c = a.add(&CycElem::one(m));
        assert_eq!(c.rational_ratio(&a), None);
    }
}
