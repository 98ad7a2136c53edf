//! Linear recurrence sequences: terms in both directions, zeros, minimal polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cancel::CancelToken;
use crate::error::{Error, Result};
use crate::IntPolynomial;

/// `X_{n+d} = a_{d-1} X_{n+d-1} + ... + a_0 X_n` with initial terms `X_0 .. X_{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LrsSpec {
    rec: Vec<BigInt>,
    inits: Vec<BigInt>,
}

impl LrsSpec {
    /// `rec_coeffs` is `a_{d-1}, ..., a_0`.
    pub fn new(rec_coeffs: Vec<BigInt>, inits: Vec<BigInt>) -> Result<Self> {
        if rec_coeffs.is_empty() {
            return Err(Error::EmptyRecurrence);
        }
        if inits.len() != rec_coeffs.len() {
            return Err(Error::ArityMismatch {
                rec: rec_coeffs.len(),
                inits: inits.len(),
            });
        }
        if rec_coeffs.last().is_some_and(|a| a.is_zero()) {
            return Err(Error::ZeroTrailingCoefficient);
        }
        Ok(LrsSpec {
            rec: rec_coeffs,
            inits,
        })
    }

    pub fn from_i64s(rec_coeffs: &[i64], inits: &[i64]) -> Result<Self> {
        Self::new(
            rec_coeffs.iter().map(|&a| BigInt::from(a)).collect(),
            inits.iter().map(|&a| BigInt::from(a)).collect(),
        )
    }

    /// The spec of the relation `x^d - a_{d-1} x^{d-1} - ... - a_0 = p` for monic `p`.
    pub fn from_char_poly(p: &IntPolynomial, inits: Vec<BigInt>) -> Result<Self> {
        if !p.is_monic() {
            return Err(Error::NotMonic);
        }
        let d = p.degree();
        Self::new((0..d).rev().map(|k| -p.coeff(k)).collect(), inits)
    }

    pub fn order(&self) -> usize {
        self.rec.len()
    }

    /// `a_{d-1}, ..., a_0`.
    pub fn rec_coeffs(&self) -> &[BigInt] {
        &self.rec
    }

    pub fn inits(&self) -> &[BigInt] {
        &self.inits
    }

    /// `a_k`.
    fn a(&self, k: usize) -> &BigInt {
        &self.rec[self.rec.len() - 1 - k]
    }

    pub fn char_poly(&self) -> IntPolynomial {
        let d = self.order();
        let mut c: Vec<BigInt> = (0..d).map(|k| -self.a(k)).collect();
        c.push(BigInt::one());
        IntPolynomial::new(c)
    }

    /// `X_0 .. X_{count-1}`.
    pub fn forward_terms(&self, count: usize) -> Vec<BigInt> {
        let d = self.order();
        let mut t: Vec<BigInt> = self.inits.iter().take(count).cloned().collect();
        while t.len() < count {
            let n = t.len() - d;
            let mut next = BigInt::zero();
            for k in 0..d {
                next += self.a(k) * &t[n + k];
            }
            t.push(next);
        }
        t
    }

    /// `X_{-1}, X_{-2}, ..., X_{-count}` by the relation itself; requires `a_0 = +-1`.
    fn backward_by_relation(&self, count: usize) -> Vec<BigInt> {
        let d = self.order();
        let a0 = self.a(0).clone();
        debug_assert!(a0.abs().is_one());
        // w[j] = X_{n+j} for the lowest index n computed so far
        let mut w: std::collections::VecDeque<BigInt> = self.inits.iter().cloned().collect();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let mut acc = w[d - 1].clone();
            for k in 1..d {
                acc -= self.a(k) * &w[k - 1];
            }
            let x = acc * &a0;
            w.pop_back();
            w.push_front(x.clone());
            out.push(x);
        }
        out
    }

    /// `X_{-1} .. X_{-count}`, integral exactly when the sequence is reversible.
    pub fn backward_terms(&self, count: usize) -> Result<Vec<BigInt>> {
        if self.a(0).abs().is_one() {
            return Ok(self.backward_by_relation(count));
        }
        let m = minimal_poly(self)?;
        if !m.constant_term().abs().is_one() {
            return Err(Error::NotReversible);
        }
        let r = m.degree();
        if r == 0 {
            return Ok(vec![BigInt::zero(); count]);
        }
        let inits = self.forward_terms(r);
        Ok(LrsSpec::from_char_poly(&m, inits)?.backward_by_relation(count))
    }

    pub fn is_reversible(&self) -> Result<bool> {
        if self.a(0).abs().is_one() {
            return Ok(true);
        }
        Ok(minimal_poly(self)?.constant_term().abs().is_one())
    }

    /// Whether every term vanishes.
    pub fn is_zero_sequence(&self) -> bool {
        self.inits.iter().all(|x| x.is_zero())
    }
}

/// Exact `X_n`; negative `n` needs a reversible sequence.
pub fn evaluate(spec: &LrsSpec, n: i64) -> Result<BigInt> {
    if n >= 0 {
        Ok(spec.forward_terms(n as usize + 1).pop().expect("nonempty"))
    } else {
        Ok(spec
            .backward_terms(n.unsigned_abs() as usize)?
            .pop()
            .expect("nonempty"))
    }
}

/// How much of the negative half-line a [`ZeroSet`] covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backward {
    NotReversible,
    /// Indices `-bound ..= -1` were searched.
    UpTo(u64),
    /// Every negative zero is listed.
    Complete,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZeroSet {
    /// Zeros at `n >= 0`, ascending.
    pub nonnegative: Vec<u64>,
    /// Zeros at `n < 0`, ascending.
    pub negative: Vec<i64>,
    pub backward: Backward,
}

impl ZeroSet {
    pub fn zero_at_origin(&self) -> bool {
        self.nonnegative.first() == Some(&0)
    }

    pub fn is_empty(&self) -> bool {
        self.nonnegative.is_empty() && self.negative.is_empty()
    }
}

/// Zeros in `[0, bound]`, and in `[-bound, -1]` for reversible sequences.
pub fn zero_search(spec: &LrsSpec, bound: u64) -> Result<ZeroSet> {
    zero_search_cancellable(spec, bound, &CancelToken::new())
}

pub fn zero_search_cancellable(
    spec: &LrsSpec,
    bound: u64,
    cancel: &CancelToken,
) -> Result<ZeroSet> {
    let count = usize::try_from(bound).map_err(|_| Error::Internal("bound too large".into()))?;
    let mut nonnegative = Vec::new();
    for (n, x) in spec.forward_terms(count + 1).iter().enumerate() {
        if n % 4096 == 0 && cancel.is_cancelled() {
            return Err(Error::Cancelled);
        }
        if x.is_zero() {
            nonnegative.push(n as u64);
        }
    }
    let (negative, backward) = if spec.is_reversible()? {
        let back = spec.backward_terms(count)?;
        let mut neg: Vec<i64> = back
            .iter()
            .enumerate()
            .filter(|(_, x)| x.is_zero())
            .map(|(k, _)| -(k as i64) - 1)
            .collect();
        neg.reverse();
        (neg, Backward::UpTo(bound))
    } else {
        (Vec::new(), Backward::NotReversible)
    };
    if cancel.is_cancelled() {
        return Err(Error::Cancelled);
    }
    Ok(ZeroSet {
        nonnegative,
        negative,
        backward,
    })
}

fn rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in (r + 1)..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[r][c];
            for j in c..cols {
                let v = &f * &m[r][j];
                m[i][j] -= v;
            }
        }
        r += 1;
    }
    r
}

fn solve(mut m: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = m.len();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        rhs.swap(c, p);
        for i in 0..n {
            if i == c || m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[c][c];
            for j in c..n {
                let v = &f * &m[c][j];
                m[i][j] -= v;
            }
            let v = &f * &rhs[c];
            rhs[i] -= v;
        }
    }
    Some((0..n).map(|i| &rhs[i] / &m[i][i]).collect())
}

/// The monic integer polynomial of least degree whose relation the sequence satisfies.
pub fn minimal_poly(spec: &LrsSpec) -> Result<IntPolynomial> {
    let d = spec.order();
    let t: Vec<BigRational> = spec
        .forward_terms(2 * d + 1)
        .into_iter()
        .map(BigRational::from_integer)
        .collect();
    let hankel = |r: usize| -> Vec<Vec<BigRational>> {
        (0..r)
            .map(|i| (0..r).map(|j| t[i + j].clone()).collect())
            .collect()
    };
    let r = rank(hankel(d));
    if r == 0 {
        return Ok(IntPolynomial::one());
    }
    let rhs: Vec<BigRational> = (0..r).map(|i| t[i + r].clone()).collect();
    let c = solve(hankel(r), rhs)
        .ok_or_else(|| Error::Internal("leading Hankel block is singular".into()))?;
    for n in 0..=(2 * d - r) {
        let s: BigRational = (0..r).map(|j| &c[j] * &t[n + j]).sum();
        if s != t[n + r] {
            return Err(Error::Internal(
                "minimal relation fails on the check window".into(),
            ));
        }
    }
    if c.iter().any(|x| !x.is_integer()) {
        return Err(Error::Internal("minimal relation is not integral".into()));
    }
    let mut coeffs: Vec<BigInt> = c.iter().map(|x| -x.to_integer()).collect();
    coeffs.push(BigInt::one());
    let m = IntPolynomial::new(coeffs);
    if spec.char_poly().div_exact(&m).is_none() {
        return Err(Error::Internal(
            "minimal polynomial does not divide the relation".into(),
        ));
    }
    Ok(m)
}
