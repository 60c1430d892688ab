//! Arithmetic over an imaginary quadratic field K = Q(sqrt(D)) and univariate
//! polynomials with coefficients in K. Elements are stored as u + v*sqrt(D)
//! with rational u, v (sqrt(D) itself, not the half-integer generator; this is
//! a coefficient representation, not a ring of integers).

use super::intpoly::IntPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// u + v*sqrt(D), rational u, v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadRat {
    pub u: BigRational,
    pub v: BigRational,
}

impl QuadRat {
    pub fn new(u: BigRational, v: BigRational) -> Self {
        QuadRat { u, v }
    }

    pub fn from_int(n: i64) -> Self {
        QuadRat {
            u: BigRational::from_integer(BigInt::from(n)),
            v: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        QuadRat { u: BigRational::zero(), v: BigRational::zero() }
    }

    pub fn one() -> Self {
        QuadRat { u: BigRational::one(), v: BigRational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn add(&self, o: &QuadRat) -> QuadRat {
        QuadRat { u: &self.u + &o.u, v: &self.v + &o.v }
    }

    pub fn sub(&self, o: &QuadRat) -> QuadRat {
        QuadRat { u: &self.u - &o.u, v: &self.v - &o.v }
    }

    pub fn neg(&self) -> QuadRat {
        QuadRat { u: -self.u.clone(), v: -self.v.clone() }
    }

    pub fn mul(&self, o: &QuadRat, d: &BigInt) -> QuadRat {
        let dd = BigRational::from_integer(d.clone());
        QuadRat {
            u: &self.u * &o.u + &self.v * &o.v * &dd,
            v: &self.u * &o.v + &self.v * &o.u,
        }
    }

    /// Galois conjugate u - v*sqrt(D).
    pub fn conj(&self) -> QuadRat {
        QuadRat { u: self.u.clone(), v: -self.v.clone() }
    }

    /// Norm u^2 - D v^2.
    pub fn norm(&self, d: &BigInt) -> BigRational {
        let dd = BigRational::from_integer(d.clone());
        &self.u * &self.u - &self.v * &self.v * dd
    }

    pub fn inv(&self, d: &BigInt) -> Option<QuadRat> {
        let n = self.norm(d);
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(QuadRat { u: c.u / &n, v: c.v / &n })
    }
}

/// Polynomial over K = Q(sqrt(D)), ascending coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPoly {
    pub disc: BigInt,
    coeffs: Vec<QuadRat>,
}

impl KPoly {
    pub fn new(disc: BigInt, mut coeffs: Vec<QuadRat>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(QuadRat::zero());
        }
        KPoly { disc, coeffs }
    }

    pub fn from_intpoly(disc: BigInt, p: &IntPoly) -> Self {
        KPoly::new(
            disc,
            p.coeffs()
                .iter()
                .map(|c| QuadRat::new(BigRational::from_integer(c.clone()), BigRational::zero()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[QuadRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> QuadRat {
        self.coeffs.get(i).cloned().unwrap_or_else(QuadRat::zero)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn leading(&self) -> &QuadRat {
        self.coeffs.last().unwrap()
    }

    pub fn is_monic(&self) -> bool {
        *self.leading() == QuadRat::one()
    }

    pub fn add(&self, o: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = vec![QuadRat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        KPoly::new(self.disc.clone(), out)
    }

    pub fn sub(&self, o: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = vec![QuadRat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            out[i] = out[i].sub(c);
        }
        KPoly::new(self.disc.clone(), out)
    }

    pub fn mul(&self, o: &KPoly) -> KPoly {
        if self.is_zero() || o.is_zero() {
            return KPoly::new(self.disc.clone(), vec![QuadRat::zero()]);
        }
        let mut out = vec![QuadRat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                let p = a.mul(b, &self.disc);
                out[i + j] = out[i + j].add(&p);
            }
        }
        KPoly::new(self.disc.clone(), out)
    }

    pub fn div_rem(&self, o: &KPoly) -> (KPoly, KPoly) {
        assert!(!o.is_zero());
        let d = o.degree();
        if self.is_zero() || self.degree() < d {
            return (KPoly::new(self.disc.clone(), vec![QuadRat::zero()]), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![QuadRat::zero(); self.degree() - d + 1];
        let lead_inv = o.leading().inv(&self.disc).expect("division by zero leading");
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let quot = rem[i].mul(&lead_inv, &self.disc);
            q[i - d] = quot.clone();
            for (j, oc) in o.coeffs.iter().enumerate() {
                let delta = quot.mul(oc, &self.disc);
                rem[i - d + j] = rem[i - d + j].sub(&delta);
            }
        }
        (
            KPoly::new(self.disc.clone(), q),
            KPoly::new(self.disc.clone(), rem),
        )
    }

    /// Apply the nontrivial automorphism of K to every coefficient.
    pub fn conj(&self) -> KPoly {
        KPoly::new(self.disc.clone(), self.coeffs.iter().map(|c| c.conj()).collect())
    }

    /// True iff all coefficients are rational.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_rational())
    }

    /// Norm down to Q[x]: self * conj(self), with rational coefficients.
    pub fn norm_poly(&self) -> Option<IntPoly> {
        let p = self.mul(&self.conj());
        if !p.is_rational() {
            return None;
        }
        let rp = super::ratpoly::RatPoly::new(p.coeffs.iter().map(|c| c.u.clone()).collect());
        let (ip, _den) = rp.to_int_scaled();
        Some(ip)
    }
}

impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // plain form per the output contract: `s` denotes sqrt(D)
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let xp = if i == 0 {
                String::new()
            } else if i == 1 {
                "x".to_string()
            } else {
                format!("x^{}", i)
            };
            let coef = if c.is_rational() {
                let u = &c.u;
                if i > 0 && u.abs().is_one() {
                    if u.is_negative() { "-".to_string() } else { String::new() }
                } else {
                    format!("{}", u)
                }
            } else if c.u.is_zero() {
                if c.v.abs().is_one() {
                    if c.v.is_negative() { "-s".to_string() } else { "s".to_string() }
                } else {
                    format!("{}*s", c.v)
                }
            } else {
                format!("({} + {}*s)", c.u, c.v)
            };
            let term = match (coef.as_str(), xp.as_str()) {
                ("", "") => "1".to_string(),
                ("-", "") => "-1".to_string(),
                ("", x) => x.to_string(),
                ("-", x) => format!("-{}", x),
                (cf, "") => cf.to_string(),
                (cf, x) => {
                    if cf.ends_with("*s") || cf.starts_with('(') {
                        format!("{}*{}", cf, x)
                    } else {
                        format!("{}*{}", cf, x)
                    }
                }
            };
            if parts.is_empty() {
                parts.push(term);
            } else if term.starts_with('-') {
                parts.push(format!("- {}", &term[1..]));
            } else {
                parts.push(format!("+ {}", term));
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrat_field_axioms() {
        let d = BigInt::from(-87);
        let a = QuadRat::new(
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::new(BigInt::from(3), BigInt::from(2)),
        );
        let ai = a.inv(&d).unwrap();
        assert_eq!(a.mul(&ai, &d), QuadRat::one());
        assert_eq!(a.mul(&a.conj(), &d).u, a.norm(&d));
    }

    #[test]
    fn kpoly_divrem() {
        let d = BigInt::from(-3);
        let f = KPoly::new(
            d.clone(),
            vec![
                QuadRat::from_int(2),
                QuadRat::new(BigRational::zero(), BigRational::one()),
                QuadRat::one(),
            ],
        );
        let g = KPoly::new(
            d.clone(),
            vec![QuadRat::new(BigRational::zero(), BigRational::one()), QuadRat::one()],
        );
        let (q, r) = f.div_rem(&g);
        assert_eq!(f, q.mul(&g).add(&r));
        assert!(r.degree() < g.degree() || r.is_zero());
    }
}
