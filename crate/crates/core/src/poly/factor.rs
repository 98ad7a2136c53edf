//! Factorization over the rationals: squarefree decomposition, a modular
//! image, Hensel lifting and exhaustive recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::FpPoly;
use super::resultant::squarefree_decomposition;
use super::IntPolynomial;
use crate::error::{Error, Result};
use crate::numtheory::primes_from;

const PRIME_TRIALS: usize = 6;

/// Irreducible factors of `f` with multiplicities, each primitive with positive
/// leading coefficient, sorted by degree then coefficients. The content of `f`
/// is dropped.
pub fn factor_rational(f: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (s, m) in squarefree_decomposition(f)? {
        if s.degree() == 0 {
            continue;
        }
        for g in factor_squarefree(&s.normalized()) {
            out.push((g, m));
        }
    }
    out.sort_by(|a, b| (a.0.degree(), a.0.coeffs()).cmp(&(b.0.degree(), b.0.coeffs())));
    Ok(out)
}

/// Whether `f` is irreducible over the rationals (constants are not).
pub fn is_irreducible(f: &IntPolynomial) -> Result<bool> {
    if f.degree() == 0 {
        return Ok(false);
    }
    let fs = factor_rational(f)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

fn factor_squarefree(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = f.degree();
    if n <= 1 {
        return vec![f.clone()];
    }
    if f.constant_term().is_zero() {
        let x = IntPolynomial::from_i64s(&[0, 1]);
        let rest = f.div_exact(&x).expect("x divides f");
        let mut out = vec![x];
        out.extend(factor_squarefree(&rest.normalized()));
        return out;
    }

    let lc = f.leading();
    let mut best: Option<(u64, usize)> = None;
    let mut trials = 0;
    for p in primes_from(3) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = FpPoly::from_int(f, p);
        if !fp.is_squarefree() {
            continue;
        }
        let count = fp.factor_degrees().len();
        if count == 1 {
            return vec![f.clone()];
        }
        if best.map_or(true, |(_, c)| count < c) {
            best = Some((p, count));
        }
        trials += 1;
        if trials >= PRIME_TRIALS {
            break;
        }
    }
    let (p, _) = best.expect("some prime keeps f squarefree");
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let modular = FpPoly::from_int(f, p).factor_squarefree(&mut rng);

    // Factor coefficients are bounded by 2^n |f|_2; lifted products carry lc(f).
    let norm = f.norm2_squared().sqrt() + BigInt::one();
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut level = 1u32;
    while modulus <= bound {
        modulus *= &pb;
        level += 1;
    }
    let lifted = hensel_lift_all(f, &modular, p, level);
    recombine(f, lifted, &modulus)
}

fn mod_sym(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn reduce(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn reduce_sym(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(f.coeffs().iter().map(|c| mod_sym(c, m)).collect())
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// `s, t` with `s g + t h = 1` over `F_p`, for coprime `g, h`.
fn bezout(g: &FpPoly, h: &FpPoly) -> (FpPoly, FpPoly) {
    let p = g.modulus();
    let (mut r0, mut r1) = (g.clone(), h.clone());
    let (mut s0, mut s1) = (FpPoly::one(p), FpPoly::zero(p));
    let (mut t0, mut t1) = (FpPoly::zero(p), FpPoly::one(p));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let inv = super::modp::inv_mod(r0.leading(), p);
    (s0.scale(inv), t0.scale(inv))
}

fn to_fp(f: &IntPolynomial, p: u64) -> FpPoly {
    FpPoly::from_int(f, p)
}

fn from_fp(f: &FpPoly) -> IntPolynomial {
    IntPolynomial::new(f.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}

/// Lifts `f = g h (mod p)` with monic `g` to a factorization modulo `p^level`.
/// Returns `(G, H)` with `G` monic and coefficients reduced into `[0, p^level)`.
fn hensel_lift_pair(
    f: &IntPolynomial,
    g: &FpPoly,
    h: &FpPoly,
    level: u32,
) -> (IntPolynomial, IntPolynomial) {
    let p = g.modulus();
    let pb = BigInt::from(p);
    let (s, t) = bezout(g, h);
    let mut big_g = from_fp(g);
    let mut big_h = from_fp(h);
    let mut m = pb.clone();
    for _ in 1..level {
        let err = f - &(&big_g * &big_h);
        let e = IntPolynomial::new(
            err.coeffs()
                .iter()
                .map(|c| {
                    debug_assert!((c % &m).is_zero());
                    c / &m
                })
                .collect(),
        );
        let e = to_fp(&e, p);
        let (q, a) = e.mul(&t).div_rem(g);
        let b = e.mul(&s).add(&q.mul(h));
        let next = &m * &pb;
        big_g = reduce(&(&big_g + &from_fp(&a).scale(&m)), &next);
        big_h = reduce(&(&big_h + &from_fp(&b).scale(&m)), &next);
        m = next;
    }
    (big_g, big_h)
}

/// Monic lifts of the monic modular factors of `f` modulo `p^level`, in order.
fn hensel_lift_all(
    f: &IntPolynomial,
    factors: &[FpPoly],
    p: u64,
    level: u32,
) -> Vec<IntPolynomial> {
    let m = BigInt::from(p).pow(level);
    if factors.len() == 1 {
        let inv = inverse_mod(&f.leading(), &m);
        return vec![reduce(&f.scale(&inv), &m)];
    }
    let g = &factors[0];
    let lc = to_fp(&IntPolynomial::constant(f.leading()), p);
    let h = factors[1..].iter().fold(lc, |acc, u| acc.mul(u));
    let (big_g, big_h) = hensel_lift_pair(f, g, &h, level);
    let mut out = vec![big_g];
    out.extend(hensel_lift_all(&big_h, &factors[1..], p, level));
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn recombine(f: &IntPolynomial, mut lifted: Vec<IntPolynomial>, m: &BigInt) -> Vec<IntPolynomial> {
    let mut result = Vec::new();
    let mut cur = f.clone();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = None;
        for subset in combinations(lifted.len(), s) {
            let b = IntPolynomial::constant(cur.leading());
            let prod = subset
                .iter()
                .fold(b, |acc, &i| reduce(&(&acc * &lifted[i]), m));
            let cand = reduce_sym(&prod, m).primitive_part();
            if cand.degree() == 0 {
                continue;
            }
            if let Some(q) = cur.div_exact(&cand) {
                found = Some((subset, cand, q));
                break;
            }
        }
        match found {
            Some((subset, cand, q)) => {
                result.push(cand.normalized());
                cur = q.normalized();
                let mut k = 0;
                lifted.retain(|_| {
                    let keep = !subset.contains(&k);
                    k += 1;
                    keep
                });
            }
            None => s += 1,
        }
    }
    if cur.degree() > 0 {
        result.push(cur.normalized());
    }
    result
}

/// Rational roots of `f`, each once, in increasing order.
pub fn rational_roots(f: &IntPolynomial) -> Result<Vec<num_rational::BigRational>> {
    let mut roots: Vec<num_rational::BigRational> = factor_rational(f)?
        .into_iter()
        .filter(|(g, _)| g.degree() == 1)
        .map(|(g, _)| num_rational::BigRational::new(-g.coeff(0), g.coeff(1)))
        .collect();
    roots.sort();
    Ok(roots)
}

/// Irreducible-factor degree pattern modulo `p`, or `None` when `p` divides the
/// leading coefficient or `f` is not squarefree modulo `p`.
pub fn factor_degrees_mod(f: &IntPolynomial, p: u64) -> Option<Vec<usize>> {
    if (f.leading() % BigInt::from(p)).is_zero() {
        return None;
    }
    let fp = FpPoly::from_int(f, p);
    if !fp.is_squarefree() {
        return None;
    }
    Some(fp.factor_degrees())
}
