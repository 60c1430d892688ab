//! Full enumeration of form class groups and their abelian structure.

use super::form::{Disc, QuadForm};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::collections::{HashMap, HashSet};

/// Default guardrail on |disc| for full enumeration.
pub const DEFAULT_MAX_DISC: i64 = 100_000_000;

/// All reduced primitive forms of the discriminant, sorted by (a, b).
pub fn enumerate_reduced_forms(d: &Disc, max_disc: i64) -> Result<Vec<QuadForm>> {
    let dv = d
        .to_i64()
        .filter(|v| v.unsigned_abs() <= max_disc.unsigned_abs())
        .ok_or_else(|| {
            Error::DiscriminantTooLarge(d.value().to_string(), max_disc.to_string())
        })?;
    let mut out = Vec::new();
    let abs_d = dv.unsigned_abs() as i64;
    let amax = ((abs_d / 3) as f64).sqrt() as i64 + 1;
    for a in 1..=amax {
        let four_a = 4 * a;
        for b in (-a + 1)..=a {
            let t = (b as i128) * (b as i128) - dv as i128;
            if t % (four_a as i128) != 0 {
                continue;
            }
            let c128 = t / (4 * a as i128);
            if c128 < a as i128 {
                continue;
            }
            let c = c128 as i64;
            // primitivity
            let g = gcd3(a, b.abs(), c);
            if g != 1 {
                continue;
            }
            if (b.abs() == a || a == c) && b < 0 {
                continue;
            }
            out.push(QuadForm::from_i64(a, b, c));
        }
    }
    out.sort();
    Ok(out)
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    fn g(a: i64, b: i64) -> i64 {
        if b == 0 { a.abs() } else { g(b, a % b) }
    }
    g(g(a, b), c)
}

/// Class number by enumeration.
pub fn class_number(d: &Disc, max_disc: i64) -> Result<u64> {
    Ok(enumerate_reduced_forms(d, max_disc)?.len() as u64)
}

/// Fully enumerated class group: elements, elementary divisors, matching
/// generators.
#[derive(Debug, Clone)]
pub struct FormClassGroup {
    pub disc: Disc,
    pub elements: Vec<QuadForm>,
    /// elementary divisors d_1 | d_2 | ... (ascending)
    pub structure: Vec<u64>,
    pub generators: Vec<QuadForm>,
}

impl FormClassGroup {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn principal(&self) -> QuadForm {
        QuadForm::principal(&self.disc)
    }
}

/// Enumerate the class group of a negative discriminant and compute its
/// structure from element orders (brute force on the multiplication table).
pub fn enumerate_class_group(d: &Disc, max_disc: i64) -> Result<FormClassGroup> {
    let elements = enumerate_reduced_forms(d, max_disc)?;
    let h = elements.len() as u64;
    let orders: HashMap<QuadForm, u64> = elements
        .iter()
        .map(|f| Ok((f.clone(), f.order(h)?)))
        .collect::<Result<_>>()?;

    // primary decomposition per prime dividing h
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

    // lambda-type per prime and generators realizing it
    let mut per_prime: Vec<(u64, Vec<u32>, Vec<QuadForm>)> = Vec::new();
    for &p in &primes {
        let pelems: Vec<&QuadForm> = elements
            .iter()
            .filter(|f| is_p_power(orders[*f], p))
            .collect();
        let lambda = p_group_type(&pelems, &orders, p);
        let gens = p_group_generators(d, &pelems, &orders, p, &lambda)?;
        per_prime.push((p, lambda, gens));
    }

    // combine into elementary divisors: the j-th largest divisor collects the
    // j-th largest lambda part of every prime (lambda lists are descending)
    let rank = per_prime.iter().map(|(_, l, _)| l.len()).max().unwrap_or(0);
    let mut structure = Vec::new();
    let mut generators = Vec::new();
    for j in (0..rank).rev() {
        let mut dvd = 1u64;
        let mut gen = QuadForm::principal(d);
        for (p, lambda, gens) in &per_prime {
            if j < lambda.len() {
                dvd *= p.pow(lambda[j]);
                gen = gen.compose(&gens[j])?;
            }
        }
        if dvd > 1 {
            structure.push(dvd);
            generators.push(gen);
        }
    }
    structure.reverse();
    generators.reverse();
    // verify
    let prod: u64 = structure.iter().product();
    if prod != h.max(1) {
        return Err(Error::InvariantViolation(format!(
            "structure product {} != class number {}",
            prod, h
        )));
    }
    for (g, dd) in generators.iter().zip(&structure) {
        if g.order(h)? != *dd {
            return Err(Error::InvariantViolation(
                "generator order does not match divisor".into(),
            ));
        }
    }
    Ok(FormClassGroup { disc: d.clone(), elements, structure, generators })
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Partition type (descending) of an abelian p-group given by its elements'
/// orders: recovered from the counts of p^k-torsion.
fn p_group_type(pelems: &[&QuadForm], orders: &HashMap<QuadForm, u64>, p: u64) -> Vec<u32> {
    let size = pelems.len() as u64;
    if size <= 1 {
        return vec![];
    }
    let mut kmax = 0u32;
    for f in pelems {
        let mut o = orders[*f];
        let mut k = 0;
        while o > 1 {
            o /= p;
            k += 1;
        }
        kmax = kmax.max(k);
    }
    // s_k = log_p #{x : x^(p^k) = 1}
    let mut s = vec![0u32; (kmax + 1) as usize];
    for k in 0..=kmax {
        let pk = p.pow(k);
        let cnt = pelems.iter().filter(|f| pk % orders[**f] == 0).count() as u64;
        let mut c = cnt;
        let mut lg = 0u32;
        while c > 1 {
            c /= p;
            lg += 1;
        }
        s[k as usize] = lg;
    }
    // conjugate partition: row k has s_k - s_(k-1) cells
    let mut conj = Vec::new();
    for k in 1..=kmax as usize {
        conj.push(s[k] - s[k - 1]);
    }
    // transpose to get lambda (descending)
    let rank = conj.first().copied().unwrap_or(0);
    let mut lambda = Vec::new();
    for i in 0..rank {
        let li = conj.iter().filter(|&&c| c > i).count() as u32;
        lambda.push(li);
    }
    lambda
}

/// Greedy generator extraction for an abelian p-group of known type.
fn p_group_generators(
    d: &Disc,
    pelems: &[&QuadForm],
    orders: &HashMap<QuadForm, u64>,
    p: u64,
    lambda: &[u32],
) -> Result<Vec<QuadForm>> {
    let mut gens: Vec<QuadForm> = Vec::new();
    let mut span: HashSet<QuadForm> = HashSet::new();
    span.insert(QuadForm::principal(d));
    for &li in lambda {
        let target = p.pow(li);
        let want_size = span.len() * target as usize;
        let mut found = None;
        for f in pelems {
            if orders[*f] != target {
                continue;
            }
            let new_span = span_with(d, &span, f)?;
            if new_span.len() == want_size {
                found = Some(((*f).clone(), new_span));
                break;
            }
        }
        let (g, new_span) =
            found.ok_or_else(|| Error::InvariantViolation("p-group basis extraction failed".into()))?;
        gens.push(g);
        span = new_span;
    }
    Ok(gens)
}

/// Subgroup generated by an existing subgroup plus one new element.
fn span_with(_d: &Disc, span: &HashSet<QuadForm>, g: &QuadForm) -> Result<HashSet<QuadForm>> {
    let mut out = span.clone();
    let mut frontier: Vec<QuadForm> = span.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        let y = x.compose(g)?;
        if out.insert(y.clone()) {
            frontier.push(y);
        }
    }
    Ok(out)
}

/// Subgroup generated by a set of classes.
pub fn subgroup_span(d: &Disc, gens: &[QuadForm]) -> Result<HashSet<QuadForm>> {
    let mut out: HashSet<QuadForm> = HashSet::new();
    let e = QuadForm::principal(d);
    out.insert(e.clone());
    let mut frontier = vec![e];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g)?;
            if out.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    Ok(out)
}

/// Left cosets of a subgroup in the full element list, each coset sorted;
/// cosets ordered by their minimal element.
pub fn cosets(
    elements: &[QuadForm],
    subgroup: &HashSet<QuadForm>,
) -> Result<Vec<Vec<QuadForm>>> {
    let mut seen: HashSet<QuadForm> = HashSet::new();
    let mut out = Vec::new();
    for f in elements {
        if seen.contains(f) {
            continue;
        }
        let mut cs: Vec<QuadForm> = subgroup
            .iter()
            .map(|s| f.compose(s))
            .collect::<Result<_>>()?;
        cs.sort();
        for x in &cs {
            seen.insert(x.clone());
        }
        out.push(cs);
    }
    out.sort();
    Ok(out)
}

/// The 3-part of the group: all elements of 3-power order.
pub fn three_part(elements: &[QuadForm], h: u64) -> Result<Vec<QuadForm>> {
    let mut out = Vec::new();
    for f in elements {
        if is_p_power(f.order(h)?, 3) {
            out.push(f.clone());
        }
    }
    Ok(out)
}

/// Elements of order coprime to 3.
pub fn prime_to_three_part(elements: &[QuadForm], h: u64) -> Result<Vec<QuadForm>> {
    let mut out = Vec::new();
    for f in elements {
        if f.order(h)? % 3 != 0 {
            out.push(f.clone());
        }
    }
    Ok(out)
}

/// True iff the 3-part is cyclic: at most 3 solutions of x^3 = e.
pub fn three_part_cyclic(elements: &[QuadForm], d: &Disc) -> Result<bool> {
    let e = QuadForm::principal(d);
    let mut cnt = 0u64;
    for f in elements {
        if f.pow(3)? == e {
            cnt += 1;
        }
    }
    Ok(cnt <= 3)
}

/// Convert a BigInt divisor list for display.
pub fn structure_string(structure: &[u64]) -> String {
    let parts: Vec<String> = structure.iter().map(|d| format!("Z/{}", d)).collect();
    if parts.is_empty() {
        "trivial".to_string()
    } else {
        parts.join(" x ")
    }
}

#[allow(dead_code)]
fn unused(_: &BigInt) -> Option<i64> {
    None::<i64>.and_then(|x| x.to_i64())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_minus87() {
        let d = Disc::from_i64(-87).unwrap();
        let g = enumerate_class_group(&d, DEFAULT_MAX_DISC).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.structure, vec![6]);
        assert_eq!(g.generators.len(), 1);
        assert_eq!(g.generators[0].order(6).unwrap(), 6);
    }

    #[test]
    fn enumerate_minus84() {
        let d = Disc::from_i64(-84).unwrap();
        let g = enumerate_class_group(&d, DEFAULT_MAX_DISC).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.structure, vec![2, 2]);
    }

    #[test]
    fn enumerate_minus23() {
        let d = Disc::from_i64(-23).unwrap();
        let g = enumerate_class_group(&d, DEFAULT_MAX_DISC).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.structure, vec![3]);
    }

    #[test]
    fn guardrail() {
        let d = Disc::from_i64(-87).unwrap();
        assert!(enumerate_reduced_forms(&d, 50).is_err());
    }

    #[test]
    fn composition_closes() {
        let d = Disc::from_i64(-87).unwrap();
        let g = enumerate_class_group(&d, DEFAULT_MAX_DISC).unwrap();
        let set: HashSet<_> = g.elements.iter().cloned().collect();
        for x in &g.elements {
            for y in &g.elements {
                assert!(set.contains(&x.compose(y).unwrap()));
            }
        }
    }
}
