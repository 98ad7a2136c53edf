//! Polynomials over a small prime field, enough for distinct-degree patterns
//! and for the modular image used by the Zassenhaus factorizer.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::Rng;

use super::IntPolynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    powmod_u64(a, p - 2, p)
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn from_int(f: &IntPolynomial, p: u64) -> Self {
        let pb = BigInt::from(p);
        Self::new(
            p,
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&pb).to_u64().expect("reduced residue fits"))
                .collect(),
        )
    }

    /// Lift with coefficients in the symmetric range `(-p/2, p/2]`.
    pub fn to_int_symmetric(&self) -> IntPolynomial {
        let half = self.p / 2;
        IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    if c > half {
                        BigInt::from(c) - BigInt::from(self.p)
                    } else {
                        BigInt::from(c)
                    }
                })
                .collect(),
        )
    }

    pub fn zero(p: u64) -> Self {
        FpPoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, s: u64) -> Self {
        Self::new(
            self.p,
            self.coeffs.iter().map(|&c| mulmod(c, s, self.p)).collect(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |v: &Vec<u64>, k: usize| v.get(k).copied().unwrap_or(0);
        Self::new(
            self.p,
            (0..n)
                .map(|k| (get(&self.coeffs, k) + get(&o.coeffs, k)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |v: &Vec<u64>, k: usize| v.get(k).copied().unwrap_or(0);
        Self::new(
            self.p,
            (0..n)
                .map(|k| (get(&self.coeffs, k) + self.p - get(&o.coeffs, k)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u128; self.coeffs.len() + o.coeffs.len() - 1];
        let p = self.p as u128;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::new(self.p, out.into_iter().map(|c| c as u64).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero");
        if self.degree() < d.degree() || self.is_zero() {
            return (Self::zero(self.p), self.clone());
        }
        let p = self.p;
        let inv = inv_mod(d.leading(), p);
        let dd = d.degree();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = mulmod(rem[k + dd], inv, p);
            if c != 0 {
                for (j, &dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] = (rem[k + j] + p - mulmod(c, dc, p)) % p;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| mulmod(c, k as u64 % self.p, self.p))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut result = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            result = result.mul(&result).rem(m);
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
        }
        result
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree() == 0 || self.gcd(&self.derivative()).degree() == 0
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(g_k, k)` where `g_k` is the product of all irreducible factors of degree `k`.
    pub fn distinct_degree(&self) -> Vec<(FpPoly, usize)> {
        let p = self.p;
        let mut f = self.monic();
        let mut out = Vec::new();
        let x = Self::x(p);
        let pe = BigUint::from(p);
        let mut h = x.rem(&f);
        let mut k = 0;
        while f.degree() >= 2 * (k + 1) {
            k += 1;
            h = h.pow_mod(&pe, &f);
            let g = f.gcd(&h.sub(&x));
            if g.degree() > 0 {
                f = f.div_rem(&g).0;
                h = h.rem(&f);
                out.push((g, k));
            }
        }
        if f.degree() > 0 {
            let deg = f.degree();
            out.push((f, deg));
        }
        out
    }

    /// Degrees of the irreducible factors of a squarefree polynomial, ascending.
    pub fn factor_degrees(&self) -> Vec<usize> {
        let mut degs = Vec::new();
        for (g, k) in self.distinct_degree() {
            for _ in 0..g.degree() / k {
                degs.push(k);
            }
        }
        degs.sort_unstable();
        degs
    }

    /// Splits a product of distinct irreducibles of degree `k` (odd `p`).
    pub fn equal_degree<R: Rng>(&self, k: usize, rng: &mut R) -> Vec<FpPoly> {
        let p = self.p;
        let n = self.degree();
        if n == k {
            return vec![self.monic()];
        }
        let exp = (BigUint::from(p).pow(k as u32) - BigUint::one()) >> 1;
        loop {
            let a = Self::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.degree() == 0 {
                continue;
            }
            let g = self.gcd(&a);
            let split = if g.degree() > 0 && g.degree() < n {
                g
            } else {
                let b = a.pow_mod(&exp, self).sub(&Self::one(p));
                self.gcd(&b)
            };
            if split.degree() > 0 && split.degree() < n {
                let other = self.div_rem(&split).0;
                let mut out = split.equal_degree(k, rng);
                out.extend(other.equal_degree(k, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a squarefree polynomial (odd `p`).
    pub fn factor_squarefree<R: Rng>(&self, rng: &mut R) -> Vec<FpPoly> {
        let mut out = Vec::new();
        for (g, k) in self.distinct_degree() {
            out.extend(g.equal_degree(k, rng));
        }
        out.sort_by(|a, b| (a.degree(), &a.coeffs).cmp(&(b.degree(), &b.coeffs)));
        out
    }
}
