//! Roots on two concentric circles, and the square-mean relation `a^2 = b c`.

use std::cmp::Ordering;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::{
    is_irreducible, is_squarefree, polynomial_sqrt, power_map, product_polynomial, IntPolynomial,
};
use crate::roots::{
    decide, isolate_roots, log2_norm_bound, modulus_partition, sep_exponent, Interval, Refiner,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RadiusRelation {
    /// Equal class sizes and `R r = 1`.
    OuterTimesInnerIsOne,
    /// Sizes `d/3` on `|z| = r` and `2d/3` on `|z| = R`, with `r R^2 = 1`.
    OuterIsInnerPowMinusHalf,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCircleReport {
    pub circle_count: usize,
    /// Class sizes, largest modulus first.
    pub class_sizes: Vec<usize>,
    pub radius_relation: RadiusRelation,
    pub consistent_shape: bool,
}

fn recip_sq(r: &mut Refiner<'_>, i: usize, bits: i64) -> Result<Interval> {
    let mut b = bits;
    loop {
        if let Some(inv) = r.sq_modulus(i, b)?.recip(bits + 8) {
            return Ok(inv);
        }
        b *= 2;
    }
}

/// Circle structure of a monic irreducible unit `f`.
pub fn two_circle_analysis(f: &IntPolynomial) -> Result<TwoCircleReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if !is_irreducible(f)? {
        return Err(Error::NotIrreducible);
    }
    if !f.constant_term().abs().is_one() {
        return Err(Error::NotUnitConstant);
    }
    let rs = isolate_roots(f)?;
    let part = modulus_partition(&rs)?;
    let sizes = part.sizes();
    let d = f.degree();
    let mut relation = RadiusRelation::None;
    if sizes.len() == 2 {
        let n = (d * d) as u64;
        let m = 2 * d as u64 * log2_norm_bound(f);
        let (outer, inner) = (part.classes[0].members[0], part.classes[1].members[0]);
        let mut r = Refiner::new(&rs);
        if sizes[0] == sizes[1] {
            // |l_R|^2 against 1/|l_r|^2; both are roots of P(x) x^N P(1/x)
            let k = sep_exponent(2 * n, 2 * m);
            let ord = decide(k, |bits| {
                Ok((r.sq_modulus(outer, bits)?, recip_sq(&mut r, inner, bits)?))
            })?;
            if ord == Ordering::Equal {
                relation = RadiusRelation::OuterTimesInnerIsOne;
            }
        } else if 3 * sizes[0].min(sizes[1]) == d {
            let (small, big) = if sizes[0] < sizes[1] {
                (outer, inner)
            } else {
                (inner, outer)
            };
            // |l_r|^2 against 1/|l_R|^4, roots of P and of the reversal of P's square map
            let k = sep_exponent(2 * n, 3 * m);
            let ord = decide(k, |bits| {
                Ok((
                    r.sq_modulus(small, bits)?,
                    recip_sq(&mut r, big, bits)?.sqr(),
                ))
            })?;
            if ord == Ordering::Equal {
                relation = RadiusRelation::OuterIsInnerPowMinusHalf;
            }
        }
    }
    Ok(TwoCircleReport {
        circle_count: sizes.len(),
        class_sizes: sizes,
        radius_relation: relation,
        consistent_shape: relation != RadiusRelation::None,
    })
}

/// Whether `a_i^2 = a_j a_k` for some roots with `j < k` of the monic squarefree `f`.
pub fn square_mean_relation(f: &IntPolynomial) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() < 3 {
        return Err(Error::DegreeTooSmall {
            required: 3,
            actual: f.degree(),
        });
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    let squares = power_map(f, 2)?;
    let all = product_polynomial(f)?;
    let off_diagonal = all.div_exact(&squares).ok_or_else(|| {
        Error::Internal("square map does not divide the product polynomial".into())
    })?;
    let pairs = polynomial_sqrt(&off_diagonal)
        .ok_or_else(|| Error::Internal("off-diagonal products are not a perfect square".into()))?;
    Ok(!squares.gcd(&pairs).is_constant())
}
