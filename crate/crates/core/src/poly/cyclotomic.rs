use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{FpPoly, IntPolynomial};
use crate::error::{Error, Result};
use crate::numtheory::{divisors, mobius, totient};

/// The `n`-th cyclotomic polynomial, `prod_{d | n} (x^d - 1)^mu(n/d)`.
pub fn cyclotomic(n: u64) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut num = IntPolynomial::one();
    let mut den = IntPolynomial::one();
    for d in divisors(n) {
        let term = &IntPolynomial::monomial(BigInt::one(), d as usize) - &IntPolynomial::one();
        match mobius(n / d) {
            1 => num = &num * &term,
            -1 => den = &den * &term,
            _ => {}
        }
    }
    num.div_exact(&den).expect("cyclotomic quotient is exact")
}

/// Indices `n` whose cyclotomic polynomial could divide a polynomial of
/// degree `deg`: `phi(n) <= deg`, and `n <= 2 deg^2` since `phi(n) >= sqrt(n/2)`.
pub fn cyclotomic_candidates(deg: usize) -> impl Iterator<Item = u64> {
    let bound = 2 * (deg as u64) * (deg as u64);
    (1..=bound.max(1)).filter(move |&n| totient(n) <= deg as u64)
}

/// Number of times `phi_n` divides `f` exactly; returns the cofactor as well.
pub fn cyclotomic_multiplicity(f: &IntPolynomial, n: u64) -> (usize, IntPolynomial) {
    let phi = cyclotomic(n);
    let mut g = f.clone();
    let mut mult = 0;
    while !g.is_zero() && g.degree() >= phi.degree() {
        let (q, r) = g.div_rem_unit(&phi);
        if !r.is_zero() {
            break;
        }
        g = q;
        mult += 1;
    }
    (mult, g)
}

const FILTER_PRIME: u64 = 2_305_843_009_213_693_951;

struct Cached {
    exact: IntPolynomial,
    image: FpPoly,
}

fn cached(n: u64) -> Arc<Cached> {
    static TABLE: OnceLock<RwLock<HashMap<u64, Arc<Cached>>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(c) = table.read().expect("cyclotomic cache").get(&n) {
        return c.clone();
    }
    let exact = cyclotomic(n);
    let image = FpPoly::from_int(&exact, FILTER_PRIME);
    let c = Arc::new(Cached { exact, image });
    table
        .write()
        .expect("cyclotomic cache")
        .insert(n, c.clone());
    c
}

/// All `(n, m)` such that `phi_n^m` exactly divides `f` with `m >= 1`,
/// in increasing `n`, together with the cyclotomic-free cofactor.
pub fn cyclotomic_factors(f: &IntPolynomial) -> (Vec<(u64, usize)>, IntPolynomial) {
    let mut g = f.clone();
    let mut found = Vec::new();
    if g.is_zero() {
        return (found, g);
    }
    for n in cyclotomic_candidates(f.degree()) {
        if g.degree() == 0 {
            break;
        }
        if totient(n) as usize > g.degree() {
            continue;
        }
        let c = cached(n);
        // a nonzero remainder modulo a prime rules out divisibility cheaply
        if !FpPoly::from_int(&g, FILTER_PRIME).rem(&c.image).is_zero() {
            continue;
        }
        let mut mult = 0;
        loop {
            let (q, r) = g.div_rem_unit(&c.exact);
            if !r.is_zero() {
                break;
            }
            g = q;
            mult += 1;
        }
        if mult > 0 {
            found.push((n, mult));
        }
    }
    (found, g)
}

/// Whether the monic `f` with `f(0) != 0` is a product of cyclotomic polynomials.
pub fn cyclotomic_product_test(f: &IntPolynomial) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if !f.constant_term().abs().is_one() {
        return Ok(false);
    }
    Ok(cyclotomic_factors(f).1.is_one())
}
