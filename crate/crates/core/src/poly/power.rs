//! Polynomials whose roots are products, ratios or powers of the roots of a
//! given polynomial, built through Newton power sums.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntPolynomial, RationalPolynomial};
use crate::error::{Error, Result};

/// Power sums `p_1 .. p_count` of the roots of a monic integer polynomial.
pub fn power_sums_monic(f: &IntPolynomial, count: usize) -> Vec<BigInt> {
    debug_assert!(f.is_monic());
    let d = f.degree();
    let mut p: Vec<BigInt> = Vec::with_capacity(count + 1);
    p.push(BigInt::from(d));
    for k in 1..=count {
        let mut acc = BigInt::zero();
        for i in 1..=k.min(d) {
            if i < k {
                acc -= f.coeff(d - i) * &p[k - i];
            } else {
                acc -= f.coeff(d - k) * BigInt::from(k);
            }
        }
        p.push(acc);
    }
    p.remove(0);
    p
}

/// Power sums `p_1 .. p_count` of the roots of an arbitrary nonconstant polynomial.
pub fn power_sums(f: &IntPolynomial, count: usize) -> Vec<BigRational> {
    if f.is_monic() {
        return power_sums_monic(f, count)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
    }
    let d = f.degree();
    let lc = BigRational::from_integer(f.leading());
    let a: Vec<BigRational> = (0..d)
        .map(|j| BigRational::from_integer(f.coeff(j)) / &lc)
        .collect();
    let mut p: Vec<BigRational> = vec![BigRational::from_integer(BigInt::from(d))];
    for k in 1..=count {
        let mut acc = BigRational::zero();
        for i in 1..=k.min(d) {
            if i < k {
                acc -= &a[d - i] * &p[k - i];
            } else {
                acc -= &a[d - k] * BigRational::from_integer(BigInt::from(k));
            }
        }
        p.push(acc);
    }
    p.remove(0);
    p
}

/// Monic polynomial of degree `sums.len()` with the given power sums, over the rationals.
pub fn from_power_sums(sums: &[BigRational]) -> RationalPolynomial {
    let n = sums.len();
    let mut e: Vec<BigRational> = vec![BigRational::one()];
    for k in 1..=n {
        let mut acc = BigRational::zero();
        for i in 1..=k {
            let term = &e[k - i] * &sums[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / BigRational::from_integer(BigInt::from(k)));
    }
    let coeffs: Vec<BigRational> = (0..=n)
        .map(|j| {
            let k = n - j;
            if k % 2 == 1 {
                -e[k].clone()
            } else {
                e[k].clone()
            }
        })
        .collect();
    RationalPolynomial::from_rationals(&coeffs)
}

/// Integer version of [`from_power_sums`]; fails if a Newton division is inexact.
pub fn from_power_sums_int(sums: &[BigInt]) -> Result<IntPolynomial> {
    let n = sums.len();
    let mut e: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=n {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &e[k - i] * &sums[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, r) = acc.div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "power sums do not define an integer polynomial (step {k})"
            )));
        }
        e.push(q);
    }
    Ok(IntPolynomial::new(
        (0..=n)
            .map(|j| {
                let k = n - j;
                if k % 2 == 1 {
                    -e[k].clone()
                } else {
                    e[k].clone()
                }
            })
            .collect(),
    ))
}

/// `f_n(x) = prod (x - l_i^n)` for monic `f` with roots `l_i`.
pub fn power_map(f: &IntPolynomial, n: u32) -> Result<IntPolynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let d = f.degree();
    if d == 0 || n == 1 {
        return Ok(f.clone());
    }
    if n == 0 {
        return Ok((&IntPolynomial::from_i64s(&[-1, 1])).pow(d as u32));
    }
    let n = n as usize;
    let p = power_sums_monic(f, d * n);
    let sums: Vec<BigInt> = (1..=d).map(|k| p[k * n - 1].clone()).collect();
    let g = from_power_sums_int(&sums)?;
    debug_assert!(g.is_monic() && g.degree() == d);
    Ok(g)
}

fn square_free_constant_root(f: &IntPolynomial) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(())
}

/// Primitive polynomial of degree `d^2` with roots `l_a * l_b` over all ordered pairs.
pub fn product_polynomial(f: &IntPolynomial) -> Result<IntPolynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree();
    if d == 0 {
        return Ok(IntPolynomial::one());
    }
    let p = power_sums(f, d * d);
    let sums: Vec<BigRational> = p.iter().map(|s| s * s).collect();
    Ok(from_power_sums(&sums).to_primitive())
}

/// Primitive polynomial of degree `d(d-1)/2` with roots `l_j * l_k`, `j < k`.
pub fn pair_product_polynomial(f: &IntPolynomial) -> Result<IntPolynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree();
    let n = d * (d.saturating_sub(1)) / 2;
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let p = power_sums(f, 2 * n);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let sums: Vec<BigRational> = (1..=n)
        .map(|k| (&p[k - 1] * &p[k - 1] - &p[2 * k - 1]) * &half)
        .collect();
    Ok(from_power_sums(&sums).to_primitive())
}

/// Primitive polynomial of degree `d^2` with roots `l_a / l_b` over all ordered
/// pairs, including the `d` diagonal ratios equal to one.
pub fn full_ratio_polynomial(f: &IntPolynomial) -> Result<IntPolynomial> {
    square_free_constant_root(f)?;
    let d = f.degree();
    if d == 0 {
        return Ok(IntPolynomial::one());
    }
    let fwd = power_sums(f, d * d);
    let bwd = power_sums(&f.reversed(), d * d);
    let sums: Vec<BigRational> = fwd.iter().zip(&bwd).map(|(a, b)| a * b).collect();
    Ok(from_power_sums(&sums).to_primitive())
}

/// Exact square root of a polynomial that is the square of an integer polynomial.
pub fn polynomial_sqrt(f: &IntPolynomial) -> Option<IntPolynomial> {
    if f.is_zero() {
        return Some(IntPolynomial::zero());
    }
    let n = f.degree();
    if n % 2 == 1 || f.leading().is_negative() {
        return None;
    }
    let m = n / 2;
    let lead = crate::numtheory::exact_sqrt(&f.leading())?;
    let lead_q = BigRational::from_integer(lead.clone());
    let mut s: Vec<BigRational> = vec![BigRational::zero(); m + 1];
    s[m] = lead_q.clone();
    for k in (0..m).rev() {
        // coefficient of x^(m+k) in s^2 is 2 s_m s_k + sum_{i+j=m+k, k<i,j<m} s_i s_j
        let mut acc = BigRational::from_integer(f.coeff(m + k));
        for i in (k + 1)..m {
            let j = m + k - i;
            if j > k && j < m {
                acc -= &s[i] * &s[j];
            }
        }
        s[k] = acc / (BigRational::from_integer(BigInt::from(2)) * &lead_q);
    }
    if s.iter().any(|c| !c.is_integer()) {
        return None;
    }
    let root = IntPolynomial::new(s.into_iter().map(|c| c.to_integer()).collect());
    if &(&root * &root) == f {
        Some(root)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_high(c)
    }

    #[test]
    fn golden_ratio_power_sums() {
        // Lucas numbers
        let s = power_sums_monic(&p(&[1, -1, -1]), 6);
        let expect: Vec<BigInt> = [1, 3, 4, 7, 11, 18]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(s, expect);
    }

    #[test]
    fn rational_power_sums_match_monic_scaling() {
        // 2x^2 - 3x + 1 has roots 1, 1/2
        let s = power_sums(&p(&[2, -3, 1]), 3);
        assert_eq!(s[0], BigRational::new(3.into(), 2.into()));
        assert_eq!(s[1], BigRational::new(5.into(), 4.into()));
        assert_eq!(s[2], BigRational::new(9.into(), 8.into()));
    }

    #[test]
    fn power_map_examples() {
        assert_eq!(power_map(&p(&[1, -1, -1]), 2).unwrap(), p(&[1, -3, 1]));
        let f = p(&[1, 2, -5, 3]);
        assert_eq!(power_map(&f, 1).unwrap(), f);
        assert_eq!(power_map(&p(&[1, -1]), 7).unwrap(), p(&[1, -1]));
        assert_eq!(power_map(&p(&[2, 1]), 2), Err(Error::NotMonic));
        // roots +-i square to -1, -1
        assert_eq!(power_map(&p(&[1, 0, 1]), 2).unwrap(), p(&[1, 2, 1]));
    }

    #[test]
    fn product_and_pair_polynomials() {
        // roots 1, 2: products 1, 2, 2, 4
        let f = p(&[1, -3, 2]);
        let prod = product_polynomial(&f).unwrap();
        let expect = &(&p(&[1, -1]) * &p(&[1, -2]).pow(2)) * &p(&[1, -4]);
        assert_eq!(prod, expect);
        assert_eq!(pair_product_polynomial(&f).unwrap(), p(&[1, -2]));
    }

    #[test]
    fn full_ratio_contains_diagonal() {
        // roots 1, 2: ratios 1, 1, 2, 1/2
        let f = p(&[1, -3, 2]);
        let r = full_ratio_polynomial(&f).unwrap();
        let expect = &(&p(&[1, -1]).pow(2) * &p(&[1, -2])) * &p(&[2, -1]);
        assert_eq!(r, expect.normalized());
    }

    #[test]
    fn polynomial_square_roots() {
        let g = p(&[3, -1, 4, 1]);
        assert_eq!(polynomial_sqrt(&(&g * &g)), Some(g.normalized()));
        assert_eq!(polynomial_sqrt(&p(&[1, 0, 2])), None);
        assert_eq!(polynomial_sqrt(&p(&[1, 2, 1])), Some(p(&[1, 1])));
    }
}
