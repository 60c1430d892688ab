//! Complex numbers over BigFloat.

use super::real::{exp, pi, sin_cos, BigFloat};

#[derive(Debug, Clone)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        BigComplex { re: BigFloat::zero(prec), im: BigFloat::zero(prec) }
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        BigComplex { re: BigFloat::from_i64(n, prec), im: BigFloat::zero(prec) }
    }

    pub fn real(re: BigFloat) -> Self {
        let p = re.prec();
        BigComplex { re, im: BigFloat::zero(p) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        BigComplex { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        BigComplex { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> Self {
        BigComplex { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        BigComplex {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn mul_real(&self, k: &BigFloat) -> Self {
        BigComplex { re: self.re.mul(k), im: self.im.mul(k) }
    }

    pub fn abs_sq(&self) -> BigFloat {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> BigFloat {
        self.abs_sq().sqrt()
    }

    pub fn div(&self, o: &Self) -> Self {
        let d = o.abs_sq();
        let n = self.mul(&o.conj());
        BigComplex { re: n.re.div(&d), im: n.im.div(&d) }
    }

    pub fn inv(&self) -> Self {
        let d = self.abs_sq();
        BigComplex { re: self.re.div(&d), im: self.im.neg().div(&d) }
    }

    pub fn powi(&self, e: u64) -> Self {
        let prec = self.prec();
        let mut acc = BigComplex::from_i64(1, prec);
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

    /// Magnitude order: log2 |z| within ~1.
    pub fn mag2(&self) -> i64 {
        self.re.mag2().max(self.im.mag2())
    }

    /// e^(2 pi i tau) for tau = re + i*im with im > 0.
    pub fn exp_2pi_i_tau(tau: &BigComplex) -> BigComplex {
        let prec = tau.prec();
        let two_pi = pi(prec + 32).shl(1);
        let radius = exp(&two_pi.mul(&tau.im).neg());
        let (s, c) = sin_cos(&two_pi.mul(&tau.re));
        BigComplex { re: radius.mul(&c), im: radius.mul(&s) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_ops() {
        let p = 128;
        let i = BigComplex::new(BigFloat::zero(p), BigFloat::from_i64(1, p));
        let m = i.mul(&i);
        assert!((m.re.to_f64() + 1.0).abs() < 1e-30);
        assert!(m.im.to_f64().abs() < 1e-30);
        let inv = i.inv();
        assert!((inv.im.to_f64() + 1.0).abs() < 1e-30);
    }

    #[test]
    fn q_from_tau() {
        // tau = i: q = e^(-2 pi)
        let p = 128;
        let tau = BigComplex::new(BigFloat::zero(p), BigFloat::from_i64(1, p));
        let q = BigComplex::exp_2pi_i_tau(&tau);
        let expect = (-2.0 * std::f64::consts::PI).exp();
        assert!((q.re.to_f64() - expect).abs() < 1e-15);
        assert!(q.im.to_f64().abs() < 1e-20);
    }
}
