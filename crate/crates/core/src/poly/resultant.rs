use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// `Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a)`, via the Sylvester determinant.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (m, n) = (f.degree(), g.degree());
    if m == 0 {
        return Ok(num_traits::pow(f.leading(), n));
    }
    if n == 0 {
        return Ok(num_traits::pow(g.leading(), m));
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for k in 0..=m {
            row[i + k] = f.coeff(m - k);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for k in 0..=n {
            row[i + k] = g.coeff(n - k);
        }
        rows.push(row);
    }
    Ok(bareiss_determinant(rows))
}

/// `disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &IntPolynomial) -> Result<BigInt> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree();
    if d == 0 {
        return Err(Error::DegreeTooSmall {
            required: 1,
            actual: 0,
        });
    }
    if d == 1 {
        return Ok(BigInt::one());
    }
    let r = resultant(f, &f.derivative())? / f.leading();
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -r } else { r })
}

/// Primitive polynomial with the roots of `f`, each of multiplicity one.
pub fn squarefree_part(f: &IntPolynomial) -> Result<IntPolynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Ok(IntPolynomial::one());
    }
    let g = f.gcd(&f.derivative());
    let q = f
        .primitive_part()
        .div_exact(&g)
        .ok_or_else(|| Error::Internal("gcd does not divide f".into()))?;
    Ok(q.normalized())
}

pub fn is_squarefree(f: &IntPolynomial) -> bool {
    !f.is_zero() && f.gcd(&f.derivative()).is_constant()
}

/// Yun's squarefree decomposition: pairs `(s_i, i)` with `pp(f) = ± prod s_i^i`,
/// each `s_i` squarefree, primitive, nonconstant and pairwise coprime.
pub fn squarefree_decomposition(f: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.normalized();
    if f.degree() == 0 {
        return Ok(Vec::new());
    }
    let exact = |a: &IntPolynomial, b: &IntPolynomial| {
        a.div_exact(b)
            .ok_or_else(|| Error::Internal("inexact division in squarefree decomposition".into()))
    };
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = exact(&f, &a0)?;
    let mut c = exact(&fp, &a0)?;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        let nb = exact(&b, &a)?;
        c = exact(&d, &a)?;
        b = nb;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}
