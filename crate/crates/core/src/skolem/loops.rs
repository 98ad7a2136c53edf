//! Linear loops `while b^T v != 0 { v <- A v }` started at `v = w`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::sequence::LrsSpec;
use crate::error::{Error, Result};
use crate::IntPolynomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearLoop {
    pub a: Vec<Vec<BigInt>>,
    pub b: Vec<BigInt>,
    pub w: Vec<BigInt>,
}

fn mat_vec(a: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

impl LinearLoop {
    pub fn new(a: Vec<Vec<BigInt>>, b: Vec<BigInt>, w: Vec<BigInt>) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if let Some(row) = a.iter().position(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row {row} of A does not have {n} entries"
            )));
        }
        if b.len() != n || w.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "A is {n}x{n} but b has {} and w has {} entries",
                b.len(),
                w.len()
            )));
        }
        Ok(LinearLoop { a, b, w })
    }

    pub fn dimension(&self) -> usize {
        self.a.len()
    }

    /// Characteristic polynomial `det(xI - A)` by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> IntPolynomial {
        let n = self.dimension();
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = mat_mul(&self.a, &m);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] += &c[n - k + 1];
            }
            m = next;
            let am = mat_mul(&self.a, &m);
            let tr: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
            c[n - k] = -tr / BigInt::from(k);
        }
        IntPolynomial::new(c)
    }

    pub fn determinant(&self) -> BigInt {
        let c0 = self.char_poly().constant_term();
        if self.dimension() % 2 == 0 {
            c0
        } else {
            -c0
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }

    /// `b^T A^k w` for `k = 0 .. count-1`.
    pub fn observations(&self, count: usize) -> Vec<BigInt> {
        let mut v = self.w.clone();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(self.b.iter().zip(&v).map(|(x, y)| x * y).sum());
            v = mat_vec(&self.a, &v);
        }
        out
    }
}

/// The sequence `X_n = b^T A^n w`; the loop terminates iff it has a zero at some `n >= 0`.
pub fn lrs_from_loop(l: &LinearLoop) -> Result<LrsSpec> {
    let chi = l.char_poly();
    if chi.constant_term().is_zero() {
        return Err(Error::SingularLoop);
    }
    LrsSpec::from_char_poly(&chi, l.observations(l.dimension()))
}
