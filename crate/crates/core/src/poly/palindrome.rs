use num_bigint::BigInt;
use num_traits::One;

use super::IntPolynomial;
use crate::error::{Error, Result};

/// `x^k + x^-k` written as a polynomial in `y = x + 1/x`, for `k = 0..=n`.
fn chebyshev_like_basis(n: usize) -> Vec<IntPolynomial> {
    let y = IntPolynomial::from_i64s(&[0, 1]);
    let mut basis = vec![IntPolynomial::from_i64s(&[2]), y.clone()];
    for k in 2..=n {
        let next = &(&y * &basis[k - 1]) - &basis[k - 2];
        basis.push(next);
    }
    basis.truncate(n + 1);
    basis
}

/// The unique `g` of degree `l` with `x^l g(x + 1/x) = f(x)` for palindromic `f`
/// of degree `2l`.
pub fn palindrome_reduce(f: &IntPolynomial) -> Result<IntPolynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_palindromic() {
        return Err(Error::NotPalindromic);
    }
    let d = f.degree();
    if d % 2 == 1 {
        return Err(Error::OddDegree);
    }
    let l = d / 2;
    let basis = chebyshev_like_basis(l);
    let mut g = IntPolynomial::constant(f.coeff(l));
    for k in 1..=l {
        g = &g + &basis[k].scale(&f.coeff(l + k));
    }
    Ok(g)
}

/// Inverse of [`palindrome_reduce`]: `x^l g(x + 1/x)` with `l = deg g`.
pub fn palindrome_expand(g: &IntPolynomial) -> IntPolynomial {
    let l = g.degree();
    // (x^2 + 1)^j x^(l-j) for each y^j
    let x2p1 = IntPolynomial::from_i64s(&[1, 0, 1]);
    let mut out = IntPolynomial::zero();
    let mut pow = IntPolynomial::one();
    for j in 0..=l {
        let term = &pow * &IntPolynomial::monomial(BigInt::one(), l - j);
        out = &out + &term.scale(&g.coeff(j));
        pow = &pow * &x2p1;
    }
    out
}
