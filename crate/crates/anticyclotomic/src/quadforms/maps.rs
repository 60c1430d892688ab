//! The projection Pic(O_N) -> Pic(O_K), its kernel, canonical lifts, and the
//! complete fibers of classes under it.

use super::classgroup::enumerate_reduced_forms;
use super::form::{Disc, QuadForm};
use crate::error::{Error, Result};
use crate::exactalg::arith::inv_mod;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Equivalent form with leading coefficient coprime to 3. For primitive forms
/// of discriminant divisible by 3 either a or c works (both divisible would
/// force 3 | b and contradict primitivity).
pub fn coprime_to_three_rep(f: &QuadForm) -> Result<QuadForm> {
    let three = BigInt::from(3);
    if !f.a.mod_floor(&three).is_zero() {
        return Ok(f.clone());
    }
    if !f.c.mod_floor(&three).is_zero() {
        // (a,b,c) -> (c,-b,a) via (x,y) |-> (-y,x)
        return Ok(QuadForm::new(f.c.clone(), -&f.b, f.a.clone()));
    }
    Err(Error::InvariantViolation(format!(
        "form {} has both outer coefficients divisible by 3",
        f
    )))
}

/// Project a class at disc(O_N) = 9^N * D down `steps` levels of the
/// conductor-3 tower: the map [I] -> [I * O_K] realized on forms by dividing
/// the middle coefficient by 3^steps modulo 2a.
pub fn project_to_maximal(f: &QuadForm, steps: u32) -> Result<QuadForm> {
    if steps == 0 {
        return f.reduce()?.reduce();
    }
    let g = coprime_to_three_rep(f)?;
    let d_from = g.discriminant();
    let nine = BigInt::from(9u64).pow(steps);
    let d_to = &d_from / &nine;
    if &d_to * &nine != d_from {
        return Err(Error::Precondition(format!(
            "discriminant {} is not divisible by 9^{}",
            d_from, steps
        )));
    }
    let two_a = BigInt::from(2) * &g.a;
    let t = BigInt::from(3u64).pow(steps);
    let tinv = inv_mod(&t.mod_floor(&two_a), &two_a).ok_or_else(|| {
        Error::InvariantViolation("3^N not invertible modulo 2a".into())
    })?;
    let b2 = (&g.b * tinv).mod_floor(&two_a);
    let c2 = (&b2 * &b2 - &d_to) / (BigInt::from(4) * &g.a);
    debug_assert_eq!(&b2 * &b2 - BigInt::from(4) * &g.a * &c2, d_to);
    QuadForm::new(g.a.clone(), b2, c2).reduce()
}

/// Canonical lift of a class from disc D to disc 9^N * D: the contraction
/// I cap O_N, realized by multiplying the middle coefficient by 3^N.
pub fn lift_canonical(f: &QuadForm, steps: u32) -> Result<QuadForm> {
    if steps == 0 {
        return f.reduce();
    }
    let g = coprime_to_three_rep(f)?;
    let d_from = g.discriminant();
    let nine = BigInt::from(9u64).pow(steps);
    let d_to = &d_from * &nine;
    let t = BigInt::from(3u64).pow(steps);
    let two_a = BigInt::from(2) * &g.a;
    let b2 = (&g.b * &t).mod_floor(&two_a);
    let c2 = (&b2 * &b2 - &d_to) / (BigInt::from(4) * &g.a);
    debug_assert_eq!(&b2 * &b2 - BigInt::from(4) * &g.a * &c2, d_to);
    let lifted = QuadForm::new(g.a.clone(), b2, c2);
    if !lifted.is_primitive() {
        return Err(Error::InvariantViolation(format!(
            "lift of {} is imprimitive",
            f
        )));
    }
    lifted.reduce()
}

/// Kernel of Pic(O_N) -> Pic(O_K): all classes at level N projecting to the
/// principal class.
pub fn projection_kernel(base: &Disc, n: u32, max_disc: i64) -> Result<Vec<QuadForm>> {
    let dn = base.order(n);
    let forms = enumerate_reduced_forms(&dn, max_disc)?;
    let e = QuadForm::principal(base);
    let mut out = Vec::new();
    for f in forms {
        if project_to_maximal(&f, n)? == e {
            out.push(f);
        }
    }
    Ok(out)
}

/// Complete fiber over a class of the maximal order: one canonical lift
/// composed with every kernel element.
pub fn lift_to_order(f: &QuadForm, n: u32, kernel: &[QuadForm]) -> Result<Vec<QuadForm>> {
    let l0 = lift_canonical(f, n)?;
    kernel.iter().map(|k| l0.compose(k)).collect()
}

/// Kernel structure expected from the tame ramification analysis:
/// (Z/3^(N-1)) for D = -3, (Z/3 x Z/3^(N-1)) for D = -3 mod 9 (D < -3),
/// (Z/3^N) for D = 3 mod 9. Returns the expected divisor list (ascending,
/// trivial entries dropped).
pub fn expected_kernel_structure(base: &Disc, n: u32) -> Vec<u64> {
    let dv = base.value();
    let m9 = dv.mod_floor(&BigInt::from(9));
    let is_minus3 = *dv == BigInt::from(-3);
    let mut out = Vec::new();
    if is_minus3 {
        if n >= 2 {
            out.push(3u64.pow(n - 1));
        }
    } else if m9 == BigInt::from(6) {
        // D = -3 mod 9
        out.push(3);
        if n >= 2 {
            out.push(3u64.pow(n - 1));
        }
        out.sort();
    } else if m9 == BigInt::from(3) {
        out.push(3u64.pow(n));
    }
    out.retain(|&d| d > 1);
    out
}

/// Abstract structure (ascending elementary divisors) of a subgroup given as
/// an explicit element list closed under composition.
pub fn subgroup_structure(elements: &[QuadForm], d: &Disc) -> Result<Vec<u64>> {
    let h = elements.len() as u64;
    if h == 1 {
        return Ok(vec![]);
    }
    // orders of all elements
    let mut orders = Vec::new();
    for f in elements {
        orders.push(f.order(h)?);
    }
    // primary types from torsion counts
    let mut hp = h;
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p * p <= hp {
        if hp % p == 0 {
            primes.push(p);
            while hp % p == 0 {
                hp /= p;
            }
        }
        p += 1;
    }
    if hp > 1 {
        primes.push(hp);
    }
    let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
    for &p in &primes {
        let pords: Vec<u64> = orders
            .iter()
            .copied()
            .filter(|&o| {
                let mut o = o;
                while o % p == 0 {
                    o /= p;
                }
                o == 1
            })
            .collect();
        let mut kmax = 0u32;
        for &o in &pords {
            let mut o = o;
            let mut k = 0;
            while o > 1 {
                o /= p;
                k += 1;
            }
            kmax = kmax.max(k);
        }
        let mut s = vec![0u32; kmax as usize + 1];
        for k in 0..=kmax {
            let pk = p.pow(k);
            let cnt = pords.iter().filter(|&&o| pk % o == 0).count() as u64;
            let mut c = cnt;
            let mut lg = 0;
            while c > 1 {
                c /= p;
                lg += 1;
            }
            s[k as usize] = lg;
        }
        let mut conj = Vec::new();
        for k in 1..=kmax as usize {
            conj.push(s[k] - s[k - 1]);
        }
        let rank = conj.first().copied().unwrap_or(0);
        let mut lambda = Vec::new();
        for i in 0..rank {
            lambda.push(conj.iter().filter(|&&c| c > i).count() as u32);
        }
        per_prime.push((p, lambda));
    }
    let rank = per_prime.iter().map(|(_, l)| l.len()).max().unwrap_or(0);
    let mut out = Vec::new();
    for j in (0..rank).rev() {
        let mut dvd = 1u64;
        for (p, lambda) in &per_prime {
            if j < lambda.len() {
                dvd *= p.pow(lambda[j]);
            }
        }
        if dvd > 1 {
            out.push(dvd);
        }
    }
    out.reverse();
    let _ = d;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadforms::classgroup::DEFAULT_MAX_DISC;

    #[test]
    fn project_principal() {
        let d = Disc::from_i64(-87).unwrap();
        let dn = d.order(1);
        let e_n = QuadForm::principal(&dn);
        let e = QuadForm::principal(&d);
        assert_eq!(project_to_maximal(&e_n, 1).unwrap(), e);
    }

    #[test]
    fn kernel_sizes_match_lemma() {
        // D = -3, N = 2: kernel Z/3
        let d = Disc::from_i64(-3).unwrap();
        let k = projection_kernel(&d, 2, DEFAULT_MAX_DISC).unwrap();
        assert_eq!(k.len(), 3);
        // D = -87 (= 3 mod 9), N = 1: kernel Z/3
        let d = Disc::from_i64(-87).unwrap();
        let k = projection_kernel(&d, 1, DEFAULT_MAX_DISC).unwrap();
        assert_eq!(k.len(), 3);
        // D = -84 (= -3 mod 9), N = 2: kernel Z/3 x Z/3
        let d = Disc::from_i64(-84).unwrap();
        let k = projection_kernel(&d, 2, DEFAULT_MAX_DISC).unwrap();
        assert_eq!(k.len(), 9);
        let st = subgroup_structure(&k, &d.order(2)).unwrap();
        assert_eq!(st, vec![3, 3]);
        assert_eq!(expected_kernel_structure(&d, 2), vec![3, 3]);
    }

    #[test]
    fn lift_projects_back() {
        let d = Disc::from_i64(-87).unwrap();
        let g = crate::quadforms::classgroup::enumerate_class_group(&d, DEFAULT_MAX_DISC).unwrap();
        let kernel = projection_kernel(&d, 1, DEFAULT_MAX_DISC).unwrap();
        for f in &g.elements {
            let fiber = lift_to_order(f, 1, &kernel).unwrap();
            assert_eq!(fiber.len(), 3);
            for l in &fiber {
                assert_eq!(project_to_maximal(l, 1).unwrap(), *f);
            }
        }
    }
}
