//! Arbitrary-precision binary floating point: value = mant * 2^exp with the
//! working precision in bits carried on the value. All operations round the
//! result back to the working precision; callers add guard bits themselves.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

#[derive(Debug, Clone)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        BigFloat { mant: BigInt::zero(), exp: 0, prec }
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Self {
        BigFloat { mant: n.clone(), exp: 0, prec }.rounded()
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::from_bigint(&BigInt::from(n), prec)
    }

    pub fn from_ratio(n: &BigInt, d: &BigInt, prec: u32) -> Self {
        assert!(!d.is_zero());
        let shift = prec as i64 + 64;
        let scaled = (n << (shift as usize)) / d;
        BigFloat { mant: scaled, exp: -shift, prec }.rounded()
    }

    pub fn from_f64(x: f64, prec: u32) -> Self {
        if x == 0.0 {
            return Self::zero(prec);
        }
        assert!(x.is_finite());
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let exp_raw = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if exp_raw == 0 {
            (frac, -1074i64)
        } else {
            (frac | (1u64 << 52), exp_raw - 1075)
        };
        let mant = BigInt::from(sign * m as i64);
        BigFloat { mant, exp: e, prec }.rounded()
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    fn rounded(mut self) -> Self {
        let bits = self.mant.bits();
        let p = self.prec as u64;
        if bits > p {
            let shift = (bits - p) as i64;
            // round to nearest, half away from zero, on the magnitude
            let half = BigInt::one() << ((shift - 1) as usize);
            let neg = self.mant.is_negative();
            let mut mag = (self.mant.abs() + half) >> (shift as usize);
            if neg {
                mag = -mag;
            }
            self.mant = mag;
            self.exp += shift;
        }
        if self.mant.is_zero() {
            self.exp = 0;
        }
        self
    }

    /// log2 of |value|, within 1: bitlen(mant) + exp.
    pub fn mag2(&self) -> i64 {
        if self.is_zero() {
            i64::MIN / 2
        } else {
            self.mant.bits() as i64 + self.exp
        }
    }

    pub fn neg(&self) -> Self {
        BigFloat { mant: -&self.mant, exp: self.exp, prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        BigFloat { mant: self.mant.abs(), exp: self.exp, prec: self.prec }
    }

    pub fn add(&self, o: &Self) -> Self {
        let prec = self.prec.max(o.prec);
        if self.is_zero() {
            let mut r = o.clone();
            r.prec = prec;
            return r.rounded();
        }
        if o.is_zero() {
            let mut r = self.clone();
            r.prec = prec;
            return r.rounded();
        }
        let (hi, lo) = if self.mag2() >= o.mag2() { (self, o) } else { (o, self) };
        // if the magnitude gap dwarfs the precision the small one is negligible
        if lo.mag2() < hi.mag2() - prec as i64 - 4 {
            let mut r = hi.clone();
            r.prec = prec;
            return r.rounded();
        }
        let (top, bot) = if hi.exp >= lo.exp { (hi, lo) } else { (lo, hi) };
        let shift = top.exp - bot.exp;
        let mant = (&top.mant << (shift as usize)) + &bot.mant;
        BigFloat { mant, exp: bot.exp, prec }.rounded()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let prec = self.prec.max(o.prec);
        BigFloat { mant: &self.mant * &o.mant, exp: self.exp + o.exp, prec }.rounded()
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        BigFloat { mant: &self.mant * BigInt::from(k), exp: self.exp, prec: self.prec }.rounded()
    }

    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero");
        let prec = self.prec.max(o.prec);
        if self.is_zero() {
            return Self::zero(prec);
        }
        let extra = prec as i64 + 64;
        let num = &self.mant << (extra as usize);
        let q = num / &o.mant;
        BigFloat { mant: q, exp: self.exp - o.exp - extra, prec }.rounded()
    }

    pub fn div_i64(&self, k: i64) -> Self {
        self.div(&BigFloat::from_i64(k, self.prec))
    }

    /// Multiply by 2^k exactly.
    pub fn shl(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        BigFloat { mant: self.mant.clone(), exp: self.exp + k, prec: self.prec }
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "sqrt of negative");
        if self.is_zero() {
            return self.clone();
        }
        let prec = self.prec;
        // scale mantissa so that the integer sqrt carries ~prec+32 bits
        let want_bits = 2 * (prec as i64 + 32);
        let cur_bits = self.mant.bits() as i64;
        let mut shift = want_bits - cur_bits;
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let scaled = if shift >= 0 {
            &self.mant << (shift as usize)
        } else {
            &self.mant >> ((-shift) as usize)
        };
        let root = scaled.sqrt();
        BigFloat { mant: root, exp: (self.exp - shift) / 2, prec }.rounded()
    }

    pub fn cmp_val(&self, o: &Self) -> Ordering {
        let d = self.sub(o);
        if d.is_zero() {
            Ordering::Equal
        } else if d.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Nearest integer and the distance to it (as |x - n|, at working precision).
    pub fn round_nearest(&self) -> (BigInt, BigFloat) {
        let n = if self.exp >= 0 {
            &self.mant << (self.exp as usize)
        } else {
            let shift = (-self.exp) as usize;
            let half = BigInt::one() << (shift - 1);
            let neg = self.mant.is_negative();
            let mag = (self.mant.abs() + half) >> shift;
            if neg {
                -mag
            } else {
                mag
            }
        };
        let resid = self.sub(&BigFloat::from_bigint(&n, self.prec)).abs();
        (n, resid)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits();
        let (m, e) = if bits > 53 {
            let shift = (bits - 53) as i64;
            ((&self.mant >> (shift as usize)).to_f64().unwrap(), self.exp + shift)
        } else {
            (self.mant.to_f64().unwrap(), self.exp)
        };
        m * 2f64.powi(e as i32)
    }

    /// Exact integer value mant*2^exp when exp >= 0, else None.
    pub fn to_exact_bigint(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.exp >= 0 {
            Some(&self.mant << (self.exp as usize))
        } else {
            None
        }
    }

    /// Scaled integer floor(x * 2^k).
    pub fn scaled_int(&self, k: i64) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        let e = self.exp + k;
        if e >= 0 {
            &self.mant << (e as usize)
        } else {
            // round to nearest on the way down
            let shift = (-e) as usize;
            let half = BigInt::one() << (shift - 1);
            let neg = self.mant.is_negative();
            let mag = (self.mant.abs() + half) >> shift;
            if neg {
                -mag
            } else {
                mag
            }
        }
    }

    pub fn sign(&self) -> Sign {
        self.mant.sign()
    }
}

// ---------------- transcendental functions ----------------

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

fn const_cache() -> &'static Mutex<HashMap<(&'static str, u32), BigFloat>> {
    static CACHE: OnceLock<Mutex<HashMap<(&'static str, u32), BigFloat>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// atan(1/q) scaled: returns round(atan(1/q) * 2^bits) as an integer.
fn atan_inv_scaled(q: i64, bits: u64) -> BigInt {
    let one = BigInt::one() << (bits as usize);
    let q2 = BigInt::from(q) * BigInt::from(q);
    let mut term = one / BigInt::from(q);
    let mut sum = BigInt::zero();
    let mut k: i64 = 0;
    while !term.is_zero() {
        let contrib = &term / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += contrib;
        } else {
            sum -= contrib;
        }
        term = term / &q2;
        k += 1;
    }
    sum
}

/// pi at the given precision (Machin's formula).
pub fn pi(prec: u32) -> BigFloat {
    {
        let cache = const_cache().lock().unwrap();
        if let Some(v) = cache.get(&("pi", prec)) {
            return v.clone();
        }
    }
    let bits = prec as u64 + 64;
    let a = atan_inv_scaled(5, bits);
    let b = atan_inv_scaled(239, bits);
    let scaled = a * BigInt::from(16) - b * BigInt::from(4);
    let v = BigFloat { mant: scaled, exp: -(bits as i64), prec }.rounded();
    const_cache().lock().unwrap().insert(("pi", prec), v.clone());
    v
}

/// atanh(1/q) scaled by 2^bits.
fn atanh_inv_scaled(q: i64, bits: u64) -> BigInt {
    let one = BigInt::one() << (bits as usize);
    let q2 = BigInt::from(q) * BigInt::from(q);
    let mut term = one / BigInt::from(q);
    let mut sum = BigInt::zero();
    let mut k: i64 = 0;
    while !term.is_zero() {
        sum += &term / BigInt::from(2 * k + 1);
        term = term / &q2;
        k += 1;
    }
    sum
}

/// ln 2 at the given precision: ln 2 = 2 atanh(1/3).
pub fn ln2(prec: u32) -> BigFloat {
    {
        let cache = const_cache().lock().unwrap();
        if let Some(v) = cache.get(&("ln2", prec)) {
            return v.clone();
        }
    }
    let bits = prec as u64 + 64;
    let scaled = atanh_inv_scaled(3, bits) * BigInt::from(2);
    let v = BigFloat { mant: scaled, exp: -(bits as i64), prec }.rounded();
    const_cache().lock().unwrap().insert(("ln2", prec), v.clone());
    v
}

/// e^x by scaling and Taylor series.
pub fn exp(x: &BigFloat) -> BigFloat {
    let prec = x.prec();
    if x.is_zero() {
        return BigFloat::from_i64(1, prec);
    }
    let mag = x.mag2(); // ~ log2 |x|
    let halvings = (mag + 8).max(0) as u32;
    let guard = 64 + 2 * halvings;
    let wp = prec + guard;
    let mut xs = x.clone();
    xs.prec = wp;
    let xs = xs.shl(-(halvings as i64));
    // Taylor
    let mut term = BigFloat::from_i64(1, wp);
    let mut sum = BigFloat::from_i64(1, wp);
    let mut n: i64 = 1;
    loop {
        term = term.mul(&xs).div_i64(n);
        if term.is_zero() || term.mag2() < -(wp as i64) {
            break;
        }
        sum = sum.add(&term);
        n += 1;
    }
    let mut r = sum;
    for _ in 0..halvings {
        r = r.mul(&r);
    }
    r.prec = prec;
    r.rounded()
}

/// Natural log for x > 0.
pub fn ln(x: &BigFloat) -> BigFloat {
    assert!(!x.is_zero() && !x.is_negative(), "ln domain");
    let prec = x.prec();
    let wp = prec + 64;
    // write x = m * 2^e with m in [1, 2)
    let bits = x.mant.bits() as i64;
    let e = x.exp + bits - 1;
    let mut m = x.clone();
    m.prec = wp;
    let m = m.shl(-e); // in [1, 2)
    // ln m = 2 atanh((m-1)/(m+1))
    let one = BigFloat::from_i64(1, wp);
    let u = m.sub(&one).div(&m.add(&one));
    let u2 = u.mul(&u);
    let mut term = u.clone();
    let mut sum = BigFloat::zero(wp);
    let mut k: i64 = 0;
    loop {
        let contrib = term.div_i64(2 * k + 1);
        if contrib.is_zero() || contrib.mag2() < -(wp as i64) {
            break;
        }
        sum = sum.add(&contrib);
        term = term.mul(&u2);
        k += 1;
    }
    let mut r = sum.shl(1);
    if e != 0 {
        r = r.add(&ln2(wp).mul(&BigFloat::from_i64(e, wp)));
    }
    r.prec = prec;
    r.rounded()
}

/// (sin x, cos x) with range reduction modulo 2 pi.
pub fn sin_cos(x: &BigFloat) -> (BigFloat, BigFloat) {
    let prec = x.prec();
    let arg_mag = x.mag2().max(0) as u32;
    let wp = prec + 64 + arg_mag;
    let mut xv = x.clone();
    xv.prec = wp;
    let pi_wp = pi(wp);
    let half_pi = pi_wp.shl(-1);
    // k = round(x / (pi/2)), r = x - k*pi/2 in [-pi/4, pi/4]
    let (k, _) = xv.div(&half_pi).round_nearest();
    let r = xv.sub(&half_pi.mul(&BigFloat::from_bigint(&k, wp)));
    let r2 = r.mul(&r);
    // sin r
    let mut term = r.clone();
    let mut sin_r = r.clone();
    let mut n: i64 = 1;
    loop {
        term = term.mul(&r2).div_i64(-(2 * n) * (2 * n + 1));
        if term.is_zero() || term.mag2() < -(wp as i64) {
            break;
        }
        sin_r = sin_r.add(&term);
        n += 1;
    }
    // cos r
    let mut term = BigFloat::from_i64(1, wp);
    let mut cos_r = BigFloat::from_i64(1, wp);
    let mut n: i64 = 1;
    loop {
        term = term.mul(&r2).div_i64(-(2 * n - 1) * (2 * n));
        if term.is_zero() || term.mag2() < -(wp as i64) {
            break;
        }
        cos_r = cos_r.add(&term);
        n += 1;
    }
    let km4 = k.mod_floor(&BigInt::from(4)).to_i64().unwrap();
    let (mut s, mut c) = match km4 {
        0 => (sin_r, cos_r),
        1 => (cos_r, sin_r.neg()),
        2 => (sin_r.neg(), cos_r.neg()),
        _ => (cos_r.neg(), sin_r),
    };
    s.prec = prec;
    c.prec = prec;
    (s.rounded(), c.rounded())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &BigFloat, b: f64, tol: f64) -> bool {
        (a.to_f64() - b).abs() <= tol
    }

    #[test]
    fn basic_arithmetic() {
        let p = 128;
        let a = BigFloat::from_ratio(&BigInt::from(1), &BigInt::from(3), p);
        let b = BigFloat::from_i64(3, p);
        assert!(close(&a.mul(&b), 1.0, 1e-30));
        let c = BigFloat::from_i64(2, p).sqrt();
        assert!(close(&c.mul(&c), 2.0, 1e-30));
    }

    #[test]
    fn constants() {
        let p = 256;
        assert!(close(&pi(p), std::f64::consts::PI, 1e-15));
        assert!(close(&ln2(p), std::f64::consts::LN_2, 1e-15));
    }

    #[test]
    fn exp_ln_roundtrip() {
        let p = 192;
        for v in [0.5f64, 1.0, -2.25, 10.0, -30.0] {
            let x = BigFloat::from_f64(v, p);
            let e = exp(&x);
            assert!(close(&e, v.exp(), v.exp().abs() * 1e-12), "exp({})", v);
            if v > 0.0 {
                let l = ln(&BigFloat::from_f64(v, p));
                assert!(close(&l, v.ln(), 1e-12));
            }
        }
        // ln(exp(x)) = x at high precision
        let x = BigFloat::from_ratio(&BigInt::from(355), &BigInt::from(113), 300);
        let r = ln(&exp(&x));
        let d = r.sub(&x).abs();
        assert!(d.mag2() < -280, "mag {}", d.mag2());
    }

    #[test]
    fn trig() {
        let p = 192;
        for v in [0.1f64, 1.0, 2.0, -4.5, 30.0] {
            let (s, c) = sin_cos(&BigFloat::from_f64(v, p));
            assert!(close(&s, v.sin(), 1e-12), "sin({})", v);
            assert!(close(&c, v.cos(), 1e-12), "cos({})", v);
        }
        // sin^2 + cos^2 = 1 tightly
        let (s, c) = sin_cos(&BigFloat::from_ratio(&BigInt::from(7), &BigInt::from(11), 256));
        let one = s.mul(&s).add(&c.mul(&c));
        let d = one.sub(&BigFloat::from_i64(1, 256)).abs();
        assert!(d.mag2() < -240);
    }

    #[test]
    fn rounding() {
        let p = 128;
        let x = BigFloat::from_ratio(&BigInt::from(7), &BigInt::from(2), p);
        let (n, r) = x.round_nearest();
        // 3.5 rounds away from zero to 4
        assert_eq!(n, BigInt::from(4));
        assert!(close(&r, 0.5, 1e-30));
    }
}
