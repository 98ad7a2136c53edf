//! Exact comparison of root moduli.
//!
//! `|l_i|^2 = l_i * conj(l_i)` is a root of the integer polynomial `P` whose
//! roots are all products `l_a l_b`. Distinct roots of `P` are separated by a
//! Mahler-type bound computed from `|f|_2` alone, since
//! `M(P) <= M(f)^(2d) <= |f|_2^(2d)`; enclosures narrower than half that bound
//! which still overlap therefore enclose equal numbers.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::dyadic::{Dyadic, Interval};
use super::isolate::{Refiner, RootSystem};
use crate::error::{Error, Result};
use crate::poly::{discriminant, is_squarefree, IntPolynomial};

fn bitlen(n: u64) -> u64 {
    64 - n.leading_zeros() as u64
}

/// An upper bound on `log2 |f|_2`.
pub fn log2_norm_bound(f: &IntPolynomial) -> u64 {
    (f.norm2_squared().bits() + 1) / 2
}

/// `k` such that two distinct roots of any squarefree integer polynomial of
/// degree at most `degree` and Mahler measure at most `2^log2_mahler` differ
/// by more than `2^-k`.
pub fn sep_exponent(degree: u64, log2_mahler: u64) -> u64 {
    if degree < 2 {
        return 0;
    }
    ((degree + 3) / 2) * bitlen(degree) + (degree - 1) * log2_mahler + 1
}

/// A positive rational below the minimal distance between distinct roots of `f`.
pub fn separation_bound(f: &IntPolynomial) -> Result<BigRational> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    let n = f.degree();
    if n < 2 {
        return Ok(BigRational::from_integer(BigInt::from(1)));
    }
    // sep^2 > 3 |disc| / (n^(n+2) |f|_2^(2(n-1)))
    let disc = discriminant(f)?.abs();
    let num = BigInt::from(3) * disc;
    let den = BigInt::from(n).pow(n as u32 + 2) * f.norm2_squared().pow(n as u32 - 1);
    let q = BigRational::new(num, den);
    let k = (q.denom().bits() as i64 - q.numer().bits() as i64) / 2 + 16;
    Ok(Dyadic::sqrt_lower(&q, k.max(16)).to_rational())
}

/// Decides the order of two real algebraic numbers known to be roots of a
/// common squarefree-separable polynomial with separation exponent `k`, given
/// enclosures at requested precisions.
pub(crate) fn decide<F>(k: u64, mut enclose: F) -> Result<Ordering>
where
    F: FnMut(i64) -> Result<(Interval, Interval)>,
{
    let tiny = Dyadic::pow2(-(k as i64) - 1);
    let k = k as i64;
    let mut bits: i64 = 32;
    loop {
        let (a, b) = enclose(bits)?;
        if a.hi < b.lo {
            return Ok(Ordering::Less);
        }
        if b.hi < a.lo {
            return Ok(Ordering::Greater);
        }
        if a.width() < tiny && b.width() < tiny {
            return Ok(Ordering::Equal);
        }
        bits = if bits < k {
            (2 * bits).min(k + 8)
        } else {
            bits + 32
        };
        if bits > 4 * k + 4096 {
            return Err(Error::PrecisionExhausted("modulus decision".into()));
        }
    }
}

/// Separation exponent for the product polynomial of `f`.
pub fn modulus_sep_exponent(f: &IntPolynomial) -> u64 {
    let d = f.degree() as u64;
    sep_exponent(d * d, 2 * d * log2_norm_bound(f))
}

pub(crate) fn compare_with(r: &mut Refiner<'_>, i: usize, j: usize, k: u64) -> Result<Ordering> {
    let rs = r.system();
    if i == j || rs.conj(i) == j {
        return Ok(Ordering::Equal);
    }
    decide(k, |bits| {
        Ok((r.sq_modulus(i, bits)?, r.sq_modulus(j, bits)?))
    })
}

/// Exact order of `|l_i|` and `|l_j|`.
pub fn modulus_compare(rs: &RootSystem, i: usize, j: usize) -> Result<Ordering> {
    rs.check_index(i)?;
    rs.check_index(j)?;
    let mut r = Refiner::new(rs);
    compare_with(&mut r, i, j, modulus_sep_exponent(rs.poly()))
}

/// One class of roots sharing a modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulusClass {
    /// Enclosure of the common squared modulus.
    pub sq_modulus: Interval,
    pub members: Vec<usize>,
}

/// Roots grouped by exactly equal modulus, largest modulus first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulusPartition {
    pub classes: Vec<ModulusClass>,
}

impl ModulusPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

fn representatives(rs: &RootSystem) -> Vec<usize> {
    (0..rs.degree()).filter(|&i| i <= rs.conj(i)).collect()
}

fn with_conjugates(rs: &RootSystem, reps: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = reps
        .iter()
        .flat_map(|&i| {
            let j = rs.conj(i);
            if j == i {
                vec![i]
            } else {
                vec![i, j]
            }
        })
        .collect();
    out.sort_unstable();
    out
}

/// Exact partition of the roots into equal-modulus classes.
pub fn modulus_partition(rs: &RootSystem) -> Result<ModulusPartition> {
    let mut r = Refiner::new(rs);
    let k = modulus_sep_exponent(rs.poly());
    let reps = representatives(rs);
    let coarse: Vec<Interval> = reps
        .iter()
        .map(|&i| r.sq_modulus(i, 32))
        .collect::<Result<_>>()?;

    // union-find over representatives
    let mut parent: Vec<usize> = (0..reps.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for a in 0..reps.len() {
        for b in (a + 1)..reps.len() {
            if find(&mut parent, a) == find(&mut parent, b) || !coarse[a].overlaps(&coarse[b]) {
                continue;
            }
            if compare_with(&mut r, reps[a], reps[b], k)? == Ordering::Equal {
                let (x, y) = (find(&mut parent, a), find(&mut parent, b));
                parent[y] = x;
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; reps.len()];
    for a in 0..reps.len() {
        let root = find(&mut parent, a);
        match root_of[root] {
            Some(g) => groups[g].push(reps[a]),
            None => {
                root_of[root] = Some(groups.len());
                groups.push(vec![reps[a]]);
            }
        }
    }
    // distinct classes have distinct moduli; refine until their enclosures separate
    let mut bits = 32;
    let encl = loop {
        let encl: Vec<Interval> = groups
            .iter()
            .map(|g| r.sq_modulus(g[0], bits))
            .collect::<Result<_>>()?;
        let disjoint =
            (0..encl.len()).all(|a| ((a + 1)..encl.len()).all(|b| !encl[a].overlaps(&encl[b])));
        if disjoint {
            break encl;
        }
        bits *= 2;
        if bits > 4 * k as i64 + 4096 {
            return Err(Error::PrecisionExhausted("ordering modulus classes".into()));
        }
    };
    let mut classes: Vec<ModulusClass> = groups
        .iter()
        .zip(encl)
        .map(|(g, e)| ModulusClass {
            sq_modulus: e,
            members: with_conjugates(rs, g),
        })
        .collect();
    classes.sort_by(|a, b| b.sq_modulus.lo.cmp(&a.sq_modulus.lo));
    Ok(ModulusPartition { classes })
}

/// Indices that might be dominant given enclosures at `bits` bits: every
/// dominant root is included.
pub fn dominant_candidates(rs: &RootSystem, bits: i64) -> Result<Vec<usize>> {
    let mut r = Refiner::new(rs);
    candidates_with(&mut r, bits)
}

pub(crate) fn candidates_with(r: &mut Refiner<'_>, bits: i64) -> Result<Vec<usize>> {
    let n = r.system().degree();
    let encl: Vec<Interval> = (0..n)
        .map(|i| r.sq_modulus(i, bits))
        .collect::<Result<_>>()?;
    let max_lo = encl
        .iter()
        .map(|e| e.lo.clone())
        .max()
        .expect("nonempty system");
    Ok((0..n).filter(|&i| encl[i].hi >= max_lo).collect())
}

/// The exact class of dominant roots, certified only among the candidates.
pub fn dominant_class(rs: &RootSystem) -> Result<Vec<usize>> {
    let mut r = Refiner::new(rs);
    dominant_class_with(&mut r)
}

pub(crate) fn dominant_class_with(r: &mut Refiner<'_>) -> Result<Vec<usize>> {
    let rs = r.system();
    let k = modulus_sep_exponent(rs.poly());
    let cands = candidates_with(r, 48)?;
    let reps: Vec<usize> = cands.iter().copied().filter(|&i| i <= rs.conj(i)).collect();
    let mut best = vec![reps[0]];
    for &c in &reps[1..] {
        match compare_with(r, best[0], c, k)? {
            Ordering::Greater => {}
            Ordering::Equal => best.push(c),
            Ordering::Less => best = vec![c],
        }
    }
    Ok(with_conjugates(rs, &best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::isolate_roots;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_high(c)
    }

    #[test]
    fn separation_bounds_are_below_true_gaps() {
        let s = separation_bound(&p(&[1, 0, -2])).unwrap();
        assert!(s > BigRational::from_integer(0.into()));
        assert!(s <= BigRational::new(2828.into(), 1000.into()));
        let s = separation_bound(&p(&[1, -1, 0])).unwrap();
        assert!(s <= BigRational::from_integer(1.into()));
        assert_eq!(
            separation_bound(&p(&[1, -2, 1])).unwrap_err(),
            Error::NotSquarefree
        );
    }

    #[test]
    fn compare_examples() {
        let rs = isolate_roots(&p(&[1, -1, -1])).unwrap();
        // index 1 is the larger real root
        assert_eq!(modulus_compare(&rs, 1, 0).unwrap(), Ordering::Greater);
        let rs = isolate_roots(&p(&[1, 0, 1])).unwrap();
        assert_eq!(modulus_compare(&rs, 0, 1).unwrap(), Ordering::Equal);
        let rs = isolate_roots(&p(&[1, 0, -2])).unwrap();
        assert_eq!(modulus_compare(&rs, 0, 1).unwrap(), Ordering::Equal);
        assert!(modulus_compare(&rs, 0, 2).is_err());
    }

    #[test]
    fn partitions() {
        let rs = isolate_roots(&p(&[1, 1, -1, 1, 5, 1, -1, 1, 1])).unwrap();
        assert_eq!(modulus_partition(&rs).unwrap().sizes(), vec![4, 4]);
        let rs = isolate_roots(&p(&[1, -1, -1])).unwrap();
        assert_eq!(modulus_partition(&rs).unwrap().sizes(), vec![1, 1]);
        let rs = isolate_roots(&p(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(modulus_partition(&rs).unwrap().sizes(), vec![4]);
        assert_eq!(dominant_class(&rs).unwrap().len(), 4);
    }
}
