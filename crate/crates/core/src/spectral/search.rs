//! Exhaustive searches over boxes of monic integer polynomials.

use rayon::prelude::*;

use num_bigint::BigInt;

use super::degeneracy::{h1_and_h2, order10_pattern};
use crate::cancel::CancelToken;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

const CHUNK: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchPredicate {
    /// At least four dominant roots and no root-of-unity ratio.
    H1AndH2,
    /// Nine dominant roots (one real, four conjugate pairs) and one smaller root.
    Order10PositivityPattern,
}

impl SearchPredicate {
    pub fn holds(self, f: &IntPolynomial) -> Result<bool> {
        match self {
            SearchPredicate::H1AndH2 => h1_and_h2(f),
            SearchPredicate::Order10PositivityPattern => order10_pattern(f),
        }
    }
}

/// The monic polynomials of a box in lexicographic order of
/// `(1, a_{d-1}, ..., a_1, a_0)`.
#[derive(Clone, Debug)]
pub struct PolynomialBox {
    degree: usize,
    height: i64,
    constants: Vec<i64>,
    palindromic: bool,
    free: Vec<usize>,
    len: u64,
}

impl PolynomialBox {
    pub fn new(degree: usize, height: u64, constants: &[i64], palindromic: bool) -> Result<Self> {
        let mut constants: Vec<i64> = constants.to_vec();
        constants.sort_unstable();
        constants.dedup();
        if palindromic {
            constants.retain(|&c| c == 1);
        }
        let lowest = if palindromic { (degree + 1) / 2 } else { 1 };
        let free: Vec<usize> = (lowest..degree).rev().collect();
        let height =
            i64::try_from(height).map_err(|_| Error::Internal("height too large".into()))?;
        let base = 2 * height as u64 + 1;
        let len = if degree == 0 {
            0
        } else {
            base.checked_pow(free.len() as u32)
                .and_then(|n| n.checked_mul(constants.len() as u64))
                .ok_or_else(|| Error::Internal("search box too large".into()))?
        };
        Ok(PolynomialBox {
            degree,
            height,
            constants,
            palindromic,
            free,
            len,
        })
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The `index`-th polynomial of the enumeration.
    pub fn get(&self, index: u64) -> IntPolynomial {
        let base = 2 * self.height as u64 + 1;
        let nc = self.constants.len() as u64;
        let mut c = vec![0i64; self.degree + 1];
        c[self.degree] = 1;
        c[0] = self.constants[(index % nc) as usize];
        let mut rest = index / nc;
        for &k in self.free.iter().rev() {
            c[k] = (rest % base) as i64 - self.height;
            rest /= base;
        }
        if self.palindromic {
            for &k in &self.free {
                c[self.degree - k] = c[k];
            }
        }
        IntPolynomial::new(c.into_iter().map(BigInt::from).collect())
    }
}

/// Every monic polynomial of degree `degree` with internal coefficients in
/// `[-height, height]` and constant term in `constants` that satisfies `predicate`.
pub fn search_box(
    degree: usize,
    height: u64,
    constants: &[i64],
    palindromic_only: bool,
    predicate: SearchPredicate,
) -> Result<Vec<IntPolynomial>> {
    search_box_cancellable(
        degree,
        height,
        constants,
        palindromic_only,
        predicate,
        &CancelToken::new(),
    )
}

pub fn search_box_cancellable(
    degree: usize,
    height: u64,
    constants: &[i64],
    palindromic_only: bool,
    predicate: SearchPredicate,
    cancel: &CancelToken,
) -> Result<Vec<IntPolynomial>> {
    let space = PolynomialBox::new(degree, height, constants, palindromic_only)?;
    let mut found = Vec::new();
    let mut start = 0;
    while start < space.len() {
        if cancel.is_cancelled() {
            return Err(Error::Cancelled);
        }
        let end = (start + CHUNK).min(space.len());
        let hits: Vec<Option<IntPolynomial>> = (start..end)
            .into_par_iter()
            .map(|i| {
                let f = space.get(i);
                Ok(predicate.holds(&f)?.then_some(f))
            })
            .collect::<Result<_>>()?;
        found.extend(hits.into_iter().flatten());
        start = end;
    }
    Ok(found)
}
