//! Simultaneous root approximation (Aberth–Ehrlich), in doubles and in
//! fixed-precision dyadic arithmetic. Nothing here is certified.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::complex::DComplex;
use super::dyadic::Dyadic;
use crate::poly::IntPolynomial;

const MAX_ITER_F64: usize = 600;

fn horner_f64(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Initial points on circles whose radii follow the upper Newton polygon of
/// the coefficient moduli; falls back to a single Fujiwara circle.
fn initial_points(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lc = c[n].abs();
    let mut bound: f64 = 0.0;
    for (k, &a) in c.iter().enumerate().take(n) {
        if a != 0.0 {
            let e = (n - k) as f64;
            let v = (a.abs() / lc).powf(1.0 / e);
            bound = bound.max(if k == 0 { v * 0.5f64.powf(1.0 / e) } else { v });
        }
    }
    let radius = (2.0 * bound).max(f64::MIN_POSITIVE);
    // a mild spread of radii avoids symmetric stalls
    let lo = c.iter().position(|&a| a != 0.0).unwrap_or(0);
    let inner = if lo < n {
        (c[lo].abs() / lc).powf(1.0 / (n - lo) as f64)
    } else {
        radius
    };
    let r = inner.clamp(radius * 1e-3, radius);
    (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(r * (1.0 + 0.01 * k as f64), theta)
        })
        .collect()
}

/// Double-precision approximations of all roots, or `None` when the
/// coefficients do not fit doubles or the iteration fails to settle.
pub fn approximate_f64(f: &IntPolynomial) -> Option<Vec<Complex64>> {
    let n = f.degree();
    let c: Vec<f64> = f
        .coeffs()
        .iter()
        .map(|a| a.to_f64().unwrap_or(f64::NAN))
        .collect();
    if c.iter().any(|a| !a.is_finite()) {
        return None;
    }
    if n == 1 {
        return Some(vec![Complex64::new(-c[0] / c[1], 0.0)]);
    }
    let mut z = initial_points(&c);
    let mut converged = vec![false; n];
    for _ in 0..MAX_ITER_F64 {
        let mut all = true;
        for k in 0..n {
            if converged[k] {
                continue;
            }
            let (p, dp) = horner_f64(&c, z[k]);
            if p.norm() == 0.0 {
                converged[k] = true;
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != k {
                    s += 1.0 / (z[k] - z[j]);
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !w.is_finite() {
                return None;
            }
            z[k] -= w;
            if w.norm() <= 1e-15 * z[k].norm().max(1e-300) {
                converged[k] = true;
            } else {
                all = false;
            }
        }
        if all {
            break;
        }
    }
    if z.iter().any(|v| !v.is_finite()) {
        return None;
    }
    Some(z)
}

/// Aberth iteration at absolute precision `2^-prec`, started from `z`.
pub fn refine_all(f: &IntPolynomial, z: &[DComplex], prec: i64, rounds: usize) -> Vec<DComplex> {
    let n = z.len();
    let df = f.derivative();
    let one = DComplex::real(Dyadic::one());
    let mut z: Vec<DComplex> = z.iter().map(|v| v.round_to(prec)).collect();
    for _ in 0..rounds {
        let mut moved = false;
        for k in 0..n {
            let p = DComplex::eval(f, &z[k]);
            if p.is_zero() {
                continue;
            }
            let dp = DComplex::eval(&df, &z[k]);
            let Some(ratio) = p.div_round(&dp, prec) else {
                continue;
            };
            let mut s = DComplex::zero();
            let mut ok = true;
            for j in 0..n {
                if j != k {
                    match one.div_round(&z[k].sub(&z[j]), prec) {
                        Some(q) => s = s.add(&q),
                        None => ok = false,
                    }
                }
            }
            if !ok {
                continue;
            }
            let den = one.sub(&ratio.mul(&s)).round_to(prec);
            let Some(w) = ratio.div_round(&den, prec) else {
                continue;
            };
            if !w.is_zero() {
                moved = true;
            }
            z[k] = z[k].sub(&w);
        }
        if !moved {
            break;
        }
    }
    z
}
