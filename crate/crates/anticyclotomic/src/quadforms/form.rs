//! Binary quadratic forms of negative discriminant: reduction, Gauss
//! composition, prime forms.

use crate::error::{Error, Result};
use crate::exactalg::arith::{ext_gcd, kronecker};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A negative discriminant, = 0 or 1 mod 4.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Disc(BigInt);

impl Disc {
    pub fn new(value: BigInt) -> Result<Disc> {
        if !value.is_negative() {
            return Err(Error::InvalidDiscriminant(value.to_string()));
        }
        let m4 = value.mod_floor(&BigInt::from(4));
        if !(m4.is_zero() || m4.is_one()) {
            return Err(Error::InvalidDiscriminant(value.to_string()));
        }
        Ok(Disc(value))
    }

    pub fn from_i64(value: i64) -> Result<Disc> {
        Disc::new(BigInt::from(value))
    }

    /// Field discriminant of Q(sqrt(r)) for a negative squarefree radicand r.
    pub fn from_radicand(r: i64) -> Result<Disc> {
        if r >= 0 {
            return Err(Error::InvalidDiscriminant(r.to_string()));
        }
        if !crate::exactalg::arith::is_squarefree(r.unsigned_abs()) {
            return Err(Error::Precondition(format!("radicand {} is not squarefree", r)));
        }
        let d = if r.rem_euclid(4) == 1 { r } else { 4 * r };
        Disc::new(BigInt::from(d))
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    /// Discriminant of the order of conductor 3^n in this field.
    pub fn order(&self, n: u32) -> Disc {
        Disc(&self.0 * BigInt::from(9u64).pow(n))
    }

    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        self.0.to_i64()
    }

    /// True iff 3 divides the discriminant (3 ramifies).
    pub fn three_ramified(&self) -> bool {
        self.0.mod_floor(&BigInt::from(3)).is_zero()
    }
}

impl fmt::Display for Disc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Positive definite integral binary quadratic form a x^2 + b xy + c y^2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl QuadForm {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Self {
        QuadForm { a, b, c }
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
        QuadForm::new(BigInt::from(a), BigInt::from(b), BigInt::from(c))
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c).is_one()
    }

    /// Principal form of a discriminant.
    pub fn principal(d: &Disc) -> QuadForm {
        let dv = d.value();
        if dv.mod_floor(&BigInt::from(4)).is_zero() {
            QuadForm::new(BigInt::one(), BigInt::zero(), -dv / BigInt::from(4))
        } else {
            QuadForm::new(BigInt::one(), BigInt::one(), (BigInt::one() - dv) / BigInt::from(4))
        }
    }

    pub fn is_reduced(&self) -> bool {
        let ab = self.b.abs();
        if ab > self.a || self.a > self.c {
            return false;
        }
        if (ab == self.a || self.a == self.c) && self.b.is_negative() {
            return false;
        }
        true
    }

    /// Normalize b into (-a, a], recomputing c from the discriminant.
    fn normalize(a: BigInt, b: BigInt, c: BigInt) -> (BigInt, BigInt, BigInt) {
        let d = &b * &b - BigInt::from(4) * &a * &c;
        let two_a = BigInt::from(2) * &a;
        let mut r = b.mod_floor(&two_a);
        if r > a {
            r -= &two_a;
        }
        let c2 = (&r * &r - &d) / (BigInt::from(4) * &a);
        (a, r, c2)
    }

    /// Reduced representative of the class; errors on non-negative discriminant.
    pub fn reduce(&self) -> Result<QuadForm> {
        if !self.discriminant().is_negative() {
            return Err(Error::Precondition(format!(
                "form ({}, {}, {}) is not positive definite",
                self.a, self.b, self.c
            )));
        }
        let (mut a, mut b, mut c) = (self.a.clone(), self.b.clone(), self.c.clone());
        if a.is_negative() {
            a = -a;
            c = -c;
        }
        let (na, nb, nc) = QuadForm::normalize(a, b, c);
        a = na;
        b = nb;
        c = nc;
        while c < a {
            let (na, nb, nc) = QuadForm::normalize(c, -b, a);
            a = na;
            b = nb;
            c = nc;
        }
        if (b.abs() == a || a == c) && b.is_negative() {
            b = -b;
        }
        Ok(QuadForm { a, b, c })
    }

    /// Inverse class: (a, -b, c), reduced.
    pub fn inverse(&self) -> Result<QuadForm> {
        QuadForm::new(self.a.clone(), -&self.b, self.c.clone()).reduce()
    }

    /// Gauss composition; both forms must be primitive of the same discriminant.
    pub fn compose(&self, other: &QuadForm) -> Result<QuadForm> {
        let d = self.discriminant();
        if d != other.discriminant() {
            return Err(Error::Precondition(format!(
                "discriminant mismatch: {} vs {}",
                d,
                other.discriminant()
            )));
        }
        let s = (&self.b + &other.b) / BigInt::from(2);
        let n = (&self.b - &other.b) / BigInt::from(2);
        // g = u*a1 + v*a2 + w*s
        let (g0, u0, v0) = ext_gcd(&self.a, &other.a);
        let (g, x0, w) = ext_gcd(&g0, &s);
        let _u = &u0 * &x0;
        let v = &v0 * &x0;
        let a3 = (&self.a * &other.a) / (&g * &g);
        let inner = &v * &n - &w * &other.c;
        let b3 = &other.b + BigInt::from(2) * (&other.a / &g) * inner;
        let two_a3 = BigInt::from(2) * &a3;
        let b3 = b3.mod_floor(&two_a3);
        let c3 = (&b3 * &b3 - &d) / (BigInt::from(4) * &a3);
        QuadForm::new(a3, b3, c3).reduce()
    }

    /// Repeated-squaring power of a class.
    pub fn pow(&self, e: u64) -> Result<QuadForm> {
        let d = Disc::new(self.discriminant())?;
        let mut acc = QuadForm::principal(&d);
        let mut base = self.reduce()?;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base)?;
            }
            base = base.compose(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Order of the class in the class group; errors if it exceeds `bound`.
    pub fn order(&self, bound: u64) -> Result<u64> {
        let d = Disc::new(self.discriminant())?;
        let e = QuadForm::principal(&d);
        let mut g = self.reduce()?;
        let mut k = 1;
        while g != e {
            g = g.compose(self)?;
            k += 1;
            if k > bound {
                return Err(Error::InvariantViolation(format!(
                    "order of ({},{},{}) exceeds bound {}",
                    self.a, self.b, self.c, bound
                )));
            }
        }
        Ok(k)
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Reduced form representing a prime ideal above p, when p is split or
/// ramified in the order of discriminant d.
pub fn prime_form(d: &Disc, p: u64) -> Result<QuadForm> {
    let dv = d.value();
    let pb = BigInt::from(p);
    if kronecker(dv, &pb) == -1 {
        return Err(Error::NoPrimeForm(p));
    }
    let four_p = BigInt::from(4 * p);
    let mut b = BigInt::zero();
    let mut found = false;
    while b < BigInt::from(2 * p) {
        if (&b * &b - dv).mod_floor(&four_p).is_zero() {
            found = true;
            break;
        }
        b += 1;
    }
    if !found {
        return Err(Error::NoPrimeForm(p));
    }
    let c = (&b * &b - dv) / &four_p;
    QuadForm::new(pb, b, c).reduce()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_cases() {
        // already reduced
        let f = QuadForm::from_i64(1, 1, 6);
        assert_eq!(f.reduce().unwrap(), f);
        // (6, 1, 1) reduces to (1, 1, 6): exhaustive check that (1,1,6) is the
        // only reduced form with a = 1 of disc -23
        let f = QuadForm::from_i64(6, 1, 1);
        assert_eq!(f.reduce().unwrap(), QuadForm::from_i64(1, 1, 6));
        // principal form of -87
        let f = QuadForm::from_i64(1, 1, 22);
        assert_eq!(f.reduce().unwrap(), f);
        // idempotent
        let g = QuadForm::from_i64(7, 5, 13).reduce().unwrap();
        assert_eq!(g.reduce().unwrap(), g);
        // positive discriminant rejected
        assert!(QuadForm::from_i64(1, 5, 1).reduce().is_err());
    }

    #[test]
    fn compose_identity_and_inverse() {
        let d = Disc::from_i64(-23).unwrap();
        let e = QuadForm::principal(&d);
        let g = QuadForm::from_i64(2, 1, 3);
        assert_eq!(e.compose(&g).unwrap(), g.reduce().unwrap());
        // inverse pair composes to the principal form
        let gi = QuadForm::from_i64(2, -1, 3);
        assert_eq!(g.compose(&gi).unwrap(), e);
        // order of (2,1,3) is 3 (h(-23) = 3 by enumeration)
        assert_eq!(g.order(100).unwrap(), 3);
    }

    #[test]
    fn prime_forms() {
        // disc -87, p = 2: 2 splits since -87 = 1 mod 8
        let d = Disc::from_i64(-87).unwrap();
        let f = prime_form(&d, 2).unwrap();
        assert_eq!(f.a, BigInt::from(2));
        assert_eq!(f.discriminant(), BigInt::from(-87));
        // disc -3, p = 7: principal class (h = 1)
        let d3 = Disc::from_i64(-3).unwrap();
        let f = prime_form(&d3, 7).unwrap();
        assert_eq!(f, QuadForm::principal(&d3));
        // inert prime rejected: (-87 | 5) = ?
        assert_eq!(crate::exactalg::kronecker_i64(-87, 5), -1);
        assert!(prime_form(&d, 5).is_err());
    }
}
