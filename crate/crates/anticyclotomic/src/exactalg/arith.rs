//! Integer utilities: extended gcd, Kronecker symbol, CRT, small primes.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Extended gcd: returns (g, u, v) with g = u*a + v*b, g >= 0.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let tmp = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, tmp);
        let tmp = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, tmp);
        let tmp = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, tmp);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of a modulo m (m > 0), if gcd(a, m) = 1.
pub fn inv_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let (g, u, _) = ext_gcd(a, m);
    if !g.is_one() {
        return None;
    }
    Some(u.mod_floor(m))
}

/// Kronecker symbol (a | n) with the standard conventions for n = 0, negative n
/// and the prime 2.
pub fn kronecker(a: &BigInt, n: &BigInt) -> i32 {
    let mut a = a.clone();
    let mut n = n.clone();
    if n.is_zero() {
        return if a.abs().is_one() { 1 } else { 0 };
    }
    let mut result = 1i32;
    if n.is_negative() {
        n = -n;
        if a.is_negative() {
            result = -result;
        }
    }
    // strip factors of 2 from n
    let mut v2 = 0u32;
    while n.is_even() {
        n /= 2;
        v2 += 1;
    }
    if v2 > 0 {
        if a.is_even() {
            return 0;
        }
        // (a|2) = (2|a) = (-1)^((a^2-1)/8), depends on a mod 8
        let am8 = a.mod_floor(&BigInt::from(8)).to_string().parse::<u8>().unwrap();
        let s2 = if am8 == 1 || am8 == 7 { 1 } else { -1 };
        if v2 % 2 == 1 && s2 == -1 {
            result = -result;
        }
    }
    a = a.mod_floor(&n);
    // now n odd positive, 0 <= a < n; standard Jacobi loop
    while !a.is_zero() {
        let mut v = 0u32;
        while a.is_even() {
            a /= 2;
            v += 1;
        }
        let nm8 = n.mod_floor(&BigInt::from(8)).to_string().parse::<u8>().unwrap();
        if v % 2 == 1 && (nm8 == 3 || nm8 == 5) {
            result = -result;
        }
        // quadratic reciprocity flip
        let am4 = a.mod_floor(&BigInt::from(4)).to_string().parse::<u8>().unwrap();
        if am4 == 3 && nm8 % 4 == 3 {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Kronecker symbol for machine integers.
pub fn kronecker_i64(a: i64, n: i64) -> i32 {
    kronecker(&BigInt::from(a), &BigInt::from(n))
}

/// Chinese remainder: solve x = r_i mod m_i for pairwise coprime moduli.
/// Returns the unique solution in [0, prod m_i).
pub fn crt(residues: &[(BigInt, BigInt)]) -> Result<BigInt> {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (r, mi) in residues {
        let (g, _, _) = ext_gcd(&m, mi);
        if !g.is_one() {
            return Err(Error::NonCoprimeModuli);
        }
        // x' = x + m * t with t = (r - x)/m mod mi
        let inv = inv_mod(&m.mod_floor(mi), mi).ok_or(Error::NonCoprimeModuli)?;
        let t = ((r - &x) * inv).mod_floor(mi);
        x += &m * t;
        m *= mi;
        x = x.mod_floor(&m);
    }
    Ok(x)
}

/// Euler phi for machine integers.
pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            phi -= phi / p;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// All primes up to n by sieve.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return vec![];
    }
    let mut sieve = vec![true; (n + 1) as usize];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n as usize {
        if sieve[p] {
            let mut q = p * p;
            while q <= n as usize {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    (2..=n).filter(|&k| sieve[k as usize]).collect()
}

/// Squarefree test for machine integers.
pub fn is_squarefree(n: u64) -> bool {
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Largest integer s with s^2 <= n, exactly.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative());
    n.sqrt()
}

/// True iff n is a perfect square.
pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let s = n.sqrt();
    &s * &s == *n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_small_cases() {
        // (1 | d) = 1 for any d >= 1
        for d in 1..50i64 {
            assert_eq!(kronecker_i64(1, d), 1);
        }
        // 3 is a quadratic nonresidue mod 29: exhaustive squaring oracle
        let squares: Vec<i64> = (1..29).map(|x| (x * x) % 29).collect();
        assert!(!squares.contains(&3));
        assert_eq!(kronecker_i64(3, 29), -1);
        assert_eq!(kronecker_i64(2, 7), 1);
        assert_eq!(kronecker_i64(5, 7), -1);
    }

    #[test]
    fn kronecker_matches_legendre_oracle() {
        for &p in &[3i64, 5, 7, 11, 13, 29, 31] {
            let squares: std::collections::HashSet<i64> =
                (1..p).map(|x| (x * x) % p).collect();
            for a in 1..p {
                let expect = if squares.contains(&a) { 1 } else { -1 };
                assert_eq!(kronecker_i64(a, p), expect, "a={} p={}", a, p);
            }
        }
    }

    #[test]
    fn kronecker_multiplicative_mod_d() {
        // chi = (d | .) for d = 29: totally multiplicative, periodic, chi(-1) = 1
        let d = 29i64;
        for a in 1..60i64 {
            for b in 1..60i64 {
                assert_eq!(
                    kronecker_i64(d, a * b),
                    kronecker_i64(d, a) * kronecker_i64(d, b)
                );
            }
            assert_eq!(kronecker_i64(d, a), kronecker_i64(d, a + d));
        }
        assert_eq!(kronecker_i64(d, -1), 1);
    }

    #[test]
    fn crt_examples() {
        // brute-force oracle for x = 4 mod 9, x = 1 mod 29
        let mut expect = None;
        for x in 0..9 * 29 {
            if x % 9 == 4 && x % 29 == 1 {
                expect = Some(x);
                break;
            }
        }
        assert_eq!(expect, Some(175));
        let r = crt(&[
            (BigInt::from(4), BigInt::from(9)),
            (BigInt::from(1), BigInt::from(29)),
        ])
        .unwrap();
        assert_eq!(r, BigInt::from(175));

        let r = crt(&[(BigInt::from(0), BigInt::from(1))]).unwrap();
        assert_eq!(r, BigInt::from(0));

        // scan 0..14 oracle
        let mut expect = None;
        for x in 0..15 {
            if x % 3 == 2 && x % 5 == 3 {
                expect = Some(x);
                break;
            }
        }
        assert_eq!(expect, Some(8));
        let r = crt(&[
            (BigInt::from(2), BigInt::from(3)),
            (BigInt::from(3), BigInt::from(5)),
        ])
        .unwrap();
        assert_eq!(r, BigInt::from(8));

        assert!(crt(&[
            (BigInt::from(1), BigInt::from(6)),
            (BigInt::from(2), BigInt::from(4)),
        ])
        .is_err());
    }

    #[test]
    fn phi_and_primes() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(261), 168);
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(is_squarefree(29));
        assert!(!is_squarefree(28));
    }
}
