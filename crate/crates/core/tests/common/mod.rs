//! Test-only helpers: a high-precision numeric root oracle built on plain
//! `BigInt` fixed point, seeded RNG, and a reader for corpus `.lrs` files.
#![allow(dead_code)]

use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skolem_core::skolem::LrsSpec;
use skolem_core::IntPolynomial;

/// Fractional bits of the oracle (about 120 decimal digits).
pub const BITS: u32 = 400;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A complex number `(re + i im) / 2^BITS`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fx {
    pub re: BigInt,
    pub im: BigInt,
}

fn one() -> BigInt {
    BigInt::from(1) << BITS
}

impl Fx {
    pub fn zero() -> Self {
        Fx {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    pub fn int(n: &BigInt) -> Self {
        Fx {
            re: n << BITS,
            im: BigInt::zero(),
        }
    }

    pub fn from_c64(z: Complex64) -> Self {
        let s = 2f64.powi(60);
        let re = BigInt::from((z.re * s) as i128) << (BITS - 60);
        let im = BigInt::from((z.im * s) as i128) << (BITS - 60);
        Fx { re, im }
    }

    pub fn add(&self, o: &Self) -> Self {
        Fx {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Fx {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Fx {
            re: (&self.re * &o.re - &self.im * &o.im) >> BITS,
            im: (&self.re * &o.im + &self.im * &o.re) >> BITS,
        }
    }

    pub fn conj(&self) -> Self {
        Fx {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|z|^2`, scaled by `2^BITS`.
    pub fn norm_sq(&self) -> BigInt {
        (&self.re * &self.re + &self.im * &self.im) >> BITS
    }

    pub fn div(&self, o: &Self) -> Self {
        let den = &o.re * &o.re + &o.im * &o.im;
        let num = Fx {
            re: &self.re * &o.re + &self.im * &o.im,
            im: &self.im * &o.re - &self.re * &o.im,
        };
        Fx {
            re: (num.re << BITS) / &den,
            im: (num.im << BITS) / &den,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Fx::int(&BigInt::from(1));
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// `log2 |z|`, roughly; `-inf` for zero.
    pub fn log2_abs(&self) -> f64 {
        let n = self.re.abs().max(self.im.abs());
        if n.is_zero() {
            return f64::NEG_INFINITY;
        }
        n.bits() as f64 - BITS as f64
    }

    pub fn to_c64(&self) -> Complex64 {
        let s = 2f64.powi(-(BITS as i32));
        Complex64::new(self.re.to_f64().unwrap() * s, self.im.to_f64().unwrap() * s)
    }
}

fn eval(coeffs: &[Fx], z: &Fx) -> Fx {
    let mut acc = Fx::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).add(c);
    }
    acc
}

/// Durand-Kerner in doubles from the standard spiral start.
fn roots_f64(f: &IntPolynomial) -> Vec<Complex64> {
    let c: Vec<f64> = f.coeffs().iter().map(|a| a.to_f64().unwrap()).collect();
    let n = c.len() - 1;
    let lc = c[n];
    let bound = 1.0 + c[..n].iter().map(|a| (a / lc).abs()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * bound).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut p = Complex64::new(0.0, 0.0);
            for &a in c.iter().rev() {
                p = p * z[i] + a;
            }
            let mut q = Complex64::new(lc, 0.0);
            for j in 0..n {
                if j != i {
                    q *= z[i] - z[j];
                }
            }
            let step = p / q;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

/// All roots of a squarefree integer polynomial to about `BITS` bits.
pub fn roots(f: &IntPolynomial) -> Vec<Fx> {
    let n = f.degree();
    assert!(n >= 1);
    let coeffs: Vec<Fx> = f.coeffs().iter().map(Fx::int).collect();
    let lc = coeffs[n].clone();
    let mut z: Vec<Fx> = roots_f64(f).into_iter().map(Fx::from_c64).collect();
    let tol = BigInt::from(1) << 40;
    for _ in 0..200 {
        let mut done = true;
        for i in 0..n {
            let p = eval(&coeffs, &z[i]);
            let mut q = lc.clone();
            for j in 0..n {
                if j != i {
                    q = q.mul(&z[i].sub(&z[j]));
                }
            }
            let step = p.div(&q);
            if step.re.abs() > tol || step.im.abs() > tol {
                done = false;
            }
            z[i] = z[i].sub(&step);
        }
        if done {
            return z;
        }
    }
    panic!("oracle did not converge for {f}");
}

/// Index of the oracle root nearest to `p`.
pub fn nearest(roots: &[Fx], p: Complex64) -> usize {
    (0..roots.len())
        .min_by(|&a, &b| {
            let da = (roots[a].to_c64() - p).norm();
            let db = (roots[b].to_c64() - p).norm();
            da.partial_cmp(&db).unwrap()
        })
        .unwrap()
}

/// Random monic polynomial of the given degree with coefficients in `[-h, h]`
/// and nonzero constant term.
pub fn random_monic(rng: &mut impl Rng, degree: usize, h: i64) -> IntPolynomial {
    loop {
        let mut c: Vec<i64> = (0..degree).map(|_| rng.gen_range(-h..=h)).collect();
        c.push(1);
        if c[0] != 0 {
            return IntPolynomial::from_i64s(&c);
        }
    }
}

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Minimal reader for `rec:` / `init:` files.
pub fn read_lrs(path: &Path) -> LrsSpec {
    let text = std::fs::read_to_string(path).unwrap();
    let mut rec = Vec::new();
    let mut init = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap().trim();
        let nums = |s: &str| {
            s.split_whitespace()
                .map(|t| t.parse::<BigInt>().unwrap())
                .collect::<Vec<_>>()
        };
        if let Some(r) = line.strip_prefix("rec:") {
            rec = nums(r);
        } else if let Some(r) = line.strip_prefix("init:") {
            init = nums(r);
        }
    }
    LrsSpec::new(rec, init).unwrap()
}

/// Corpus `.lrs` files whose name starts with `prefix`.
pub fn corpus_specs(prefix: &str) -> Vec<(String, LrsSpec)> {
    let mut out: Vec<(String, LrsSpec)> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "lrs"))
        .filter(|p| p.file_name().unwrap().to_string_lossy().starts_with(prefix))
        .map(|p| {
            (
                p.file_name().unwrap().to_string_lossy().into_owned(),
                read_lrs(&p),
            )
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}
