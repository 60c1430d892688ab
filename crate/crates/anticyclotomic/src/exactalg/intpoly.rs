//! Univariate polynomials with big-integer coefficients, ascending degree order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![BigInt::zero()] }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn x() -> Self {
        IntPoly { coeffs: vec![BigInt::zero(), BigInt::one()] }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly { coeffs: vec![c] }
    }

    /// x^n
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        IntPoly { coeffs: c }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients in ascending degree order; highest is nonzero unless zero poly.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// Max |coefficient|.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact division: self = q * other, panics if the division is not exact.
    pub fn div_exact(&self, other: &IntPoly) -> IntPoly {
        let (q, r) = self.div_rem_exact_lead(other);
        assert!(r.is_zero(), "division not exact");
        q
    }

    /// Division with remainder, valid when the leading coefficient of `other`
    /// divides everything it needs to (always for monic divisors).
    pub fn div_rem_exact_lead(&self, other: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(!other.is_zero());
        let mut rem = self.coeffs.clone();
        let d = other.degree();
        if self.degree() < d || self.is_zero() {
            return (IntPoly::zero(), self.clone());
        }
        let mut q = vec![BigInt::zero(); self.degree() - d + 1];
        let lead = other.leading().clone();
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (quot, r) = rem[i].div_rem(&lead);
            assert!(r.is_zero(), "leading coefficient does not divide");
            q[i - d] = quot.clone();
            for (j, oc) in other.coeffs.iter().enumerate() {
                let idx = i - d + j;
                let delta = &quot * oc;
                rem[idx] -= delta;
            }
        }
        (IntPoly::new(q), IntPoly::new(rem))
    }

    pub fn derivative(&self) -> IntPoly {
        if self.degree() == 0 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// gcd of all coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Substitute x -> -x.
    pub fn flip_sign(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Resultant of self and other (Sylvester determinant, exact).
    pub fn resultant(&self, other: &IntPoly) -> BigInt {
        resultant_rational(self, other)
    }

    /// Discriminant via the Sylvester resultant: disc(f) =
    /// (-1)^(n(n-1)/2) res(f, f') / lc(f).
    pub fn discriminant(&self) -> BigInt {
        let n = self.degree();
        assert!(n >= 1);
        let fp = self.derivative();
        let res = resultant_rational(self, &fp);
        let sign = if (n * (n - 1) / 2) % 2 == 1 { -1 } else { 1 };
        let d = res / self.leading();
        d * BigInt::from(sign)
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = if i == 0 {
                format!("{}", mag)
            } else {
                let xp = if i == 1 { var.to_string() } else { format!("{}^{}", var, i) };
                if mag.is_one() {
                    xp
                } else {
                    format!("{}*{}", mag, xp)
                }
            };
            if parts.is_empty() {
                if c.is_negative() {
                    parts.push(format!("-{}", term));
                } else {
                    parts.push(term);
                }
            } else if c.is_negative() {
                parts.push(format!("- {}", term));
            } else {
                parts.push(format!("+ {}", term));
            }
        }
        parts.join(" ")
    }
}

/// Resultant via exact fraction-free Gaussian elimination on the Sylvester
/// matrix (Bareiss). Robust for the moderate degrees used here.
pub fn resultant_rational(f: &IntPoly, g: &IntPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let m = f.degree();
    let n = g.degree();
    if m == 0 {
        return f.coeff(0).pow(n as u32);
    }
    if n == 0 {
        return g.coeff(0).pow(m as u32);
    }
    let size = m + n;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (j, c) in f.coeffs.iter().enumerate() {
            mat[i][i + (m - j)] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.coeffs.iter().enumerate() {
            mat[n + i][i + (n - j)] = c.clone();
        }
    }
    bareiss_det(mat)
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let mut found = false;
            for i in k + 1..n {
                if !m[i][k].is_zero() {
                    m.swap(i, k);
                    sign = -sign;
                    found = true;
                    break;
                }
            }
            if !found {
                return BigInt::zero();
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_div_roundtrip() {
        let f = IntPoly::from_i64(&[-12, 9, 0, 1]);
        let g = IntPoly::from_i64(&[3, 0, 1]);
        let p = f.mul(&g);
        assert_eq!(p.div_exact(&g), f);
    }

    #[test]
    fn discriminant_cubics() {
        // disc(x^3 + 9x - 12) = -4*9^3 - 27*144 = -6804
        let f = IntPoly::from_i64(&[-12, 9, 0, 1]);
        assert_eq!(f.discriminant(), BigInt::from(-6804));
        // disc(x^3 - x^2 + 2x + 1) = -87
        let f = IntPoly::from_i64(&[1, 2, -1, 1]);
        assert_eq!(f.discriminant(), BigInt::from(-87));
        // disc(x^2 + 1) = -4
        let f = IntPoly::from_i64(&[1, 0, 1]);
        assert_eq!(f.discriminant(), BigInt::from(-4));
    }

    #[test]
    fn display_form() {
        let f = IntPoly::from_i64(&[3, 0, 0, 27, 0, 0, 9, 0, 0, 1]);
        assert_eq!(f.to_string(), "x^9 + 9*x^6 + 27*x^3 + 3");
        let g = IntPoly::from_i64(&[-12, 9, 0, 1]);
        assert_eq!(g.to_string(), "x^3 + 9*x - 12");
    }
}
