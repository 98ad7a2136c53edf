//! Exponential-polynomial coefficients and effective bounds when one root dominates.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::classify::{all_simple, repeated_part};
use super::sequence::{minimal_poly, Backward, LrsSpec, ZeroSet};
use crate::error::{Error, Result};
use crate::poly::{is_squarefree, squarefree_part};
use crate::roots::{
    dominant_class, isolate_roots, modulus_partition, ComplexBox, Dyadic, Interval, Refiner,
    RootSystem,
};
use crate::IntPolynomial;

/// Doublings of the working precision before giving up.
pub const DEFAULT_PRECISION_CAP: u32 = 12;

const BASE_BITS: i64 = 64;

/// Enclosures of `l_k` and `c_k` with `X_n = sum_k c_k l_k^n`, for a sequence
/// whose minimal polynomial is squarefree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpPolyCoeffs {
    pub minimal_poly: IntPolynomial,
    pub roots: Vec<ComplexBox>,
    pub coeffs: Vec<ComplexBox>,
}

/// `A` with `sum_k X_k x^(-k-1) = A(x) / m(x)`, so that `c_k = A(l_k) / m'(l_k)`.
fn numerator(m: &IntPolynomial, terms: &[BigInt]) -> IntPolynomial {
    let r = m.degree();
    let coeffs = (0..r)
        .map(|j| ((j + 1)..=r).map(|i| m.coeff(i) * &terms[i - j - 1]).sum())
        .collect();
    IntPolynomial::new(coeffs)
}

fn coeff_boxes(
    r: &mut Refiner<'_>,
    a: &IntPolynomial,
    dm: &IntPolynomial,
    bits: i64,
) -> Result<Option<(Vec<ComplexBox>, Vec<ComplexBox>)>> {
    let n = r.system().degree();
    let mut roots = Vec::with_capacity(n);
    let mut coeffs = Vec::with_capacity(n);
    for i in 0..n {
        let b = r.enclose(i, bits)?;
        let num = ComplexBox::eval(a, &b);
        let Some(c) = num.div(&ComplexBox::eval(dm, &b), bits) else {
            return Ok(None);
        };
        roots.push(b);
        coeffs.push(c);
    }
    Ok(Some((roots, coeffs)))
}

/// Coefficient enclosures with root boxes of width at most `2^-bits`.
pub fn exp_poly_coeffs(spec: &LrsSpec, bits: i64) -> Result<ExpPolyCoeffs> {
    let m = minimal_poly(spec)?;
    if m.degree() == 0 {
        return Ok(ExpPolyCoeffs {
            minimal_poly: m,
            roots: Vec::new(),
            coeffs: Vec::new(),
        });
    }
    if !is_squarefree(&m) {
        return Err(Error::NotSquarefree);
    }
    let rs = isolate_roots(&m)?;
    let a = numerator(&m, &spec.forward_terms(m.degree()));
    let dm = m.derivative();
    let mut r = Refiner::new(&rs);
    let mut b = bits;
    loop {
        if let Some((roots, coeffs)) = coeff_boxes(&mut r, &a, &dm, b)? {
            return Ok(ExpPolyCoeffs {
                minimal_poly: m,
                roots,
                coeffs,
            });
        }
        b *= 2;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundVerdict {
    /// The complete zero set on `n >= 0`; every `n > threshold` is nonzero.
    Decided {
        zeros: ZeroSet,
        threshold: u64,
    },
    Inconclusive,
}

fn log2_approx(x: &Dyadic) -> f64 {
    let m = x.mantissa().abs();
    let b = m.bits();
    let shift = b.saturating_sub(53);
    let top: BigInt = &m >> shift;
    let top = top.to_string().parse::<f64>().unwrap_or(1.0);
    top.log2() + shift as f64 + x.exponent() as f64
}

fn pow_lower(t: &Dyadic, n: u64, prec: i64) -> Dyadic {
    let mut acc = Dyadic::one();
    let mut base = t.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base).floor_to(prec);
        }
        base = base.mul(&base).floor_to(prec);
        e >>= 1;
    }
    acc
}

/// Smallest certified `N` with `|c_dom| w_dom^n > sum |c_k| w_k^n` for all
/// `n > N`, from enclosures of the squared weights `w_k^2`.
fn threshold(weights: &[Interval], abs_sq: &[Interval], dom: usize, prec: i64) -> Option<u64> {
    let others: Vec<usize> = (0..weights.len()).filter(|&k| k != dom).collect();
    if others.is_empty() {
        return Some(0);
    }
    let c_lo_sq = abs_sq[dom].lo.clone();
    if c_lo_sq.signum() <= 0 {
        return None;
    }
    let b_hi = others.iter().map(|&k| weights[k].hi.clone()).max()?;
    let a_lo = weights[dom].lo.clone();
    if b_hi.signum() <= 0 || a_lo <= b_hi {
        return None;
    }
    let t = Dyadic::div_floor(&a_lo, &b_hi, prec);
    if t <= Dyadic::one() {
        return None;
    }
    // (sum |c_k|)^2 <= (#others) * sum |c_k|^2
    let s_sq = others
        .iter()
        .fold(Dyadic::zero(), |acc, &k| acc.add(&abs_sq[k].hi))
        .mul(&Dyadic::from_i64(others.len() as i64));
    let rhs = Dyadic::div_ceil(&s_sq, &c_lo_sq, prec);
    let est = (log2_approx(&rhs) / log2_approx(&t)).ceil();
    let mut n0: u64 = if est.is_finite() && est > 0.0 {
        est as u64
    } else {
        0
    };
    for _ in 0..64 {
        if pow_lower(&t, n0 + 1, prec) > rhs {
            return Some(n0);
        }
        n0 += n0 / 8 + 1;
    }
    None
}

fn weights(boxes: &[ComplexBox], reciprocal: bool, prec: i64) -> Option<Vec<Interval>> {
    boxes
        .iter()
        .map(|b| {
            let w = b.norm_sq();
            if reciprocal {
                w.recip(prec)
            } else {
                Some(w)
            }
        })
        .collect()
}

fn unique_dominant(rs: &RootSystem) -> Result<usize> {
    let dom = dominant_class(rs)?;
    if dom.len() != 1 {
        return Err(Error::PreconditionDominance(format!(
            "{} dominant roots",
            dom.len()
        )));
    }
    Ok(dom[0])
}

/// Complete zero set on `n >= 0` for a sequence with one simple dominant root;
/// the negative side is complete too when a single root has least modulus.
pub fn dominant_root_bound(spec: &LrsSpec) -> Result<BoundVerdict> {
    dominant_root_bound_with_cap(spec, DEFAULT_PRECISION_CAP)
}

pub fn dominant_root_bound_with_cap(spec: &LrsSpec, cap: u32) -> Result<BoundVerdict> {
    let m = minimal_poly(spec)?;
    if m.degree() == 0 {
        return Err(Error::PreconditionDominance("zero sequence".into()));
    }
    if !is_squarefree(&m) {
        return Err(Error::PreconditionDominance(
            "minimal polynomial has repeated roots".into(),
        ));
    }
    let rs = isolate_roots(&m)?;
    let dom = unique_dominant(&rs)?;
    let reversible = m.constant_term().abs().is_one();
    let smallest = if reversible {
        let part = modulus_partition(&rs)?;
        let last = part.classes.last().expect("nonempty partition");
        (last.members.len() == 1).then(|| last.members[0])
    } else {
        None
    };
    let a = numerator(&m, &spec.forward_terms(m.degree()));
    let dm = m.derivative();
    let mut r = Refiner::new(&rs);
    let mut bits = BASE_BITS;
    for _ in 0..=cap {
        let prec = bits + 16;
        if let Some((roots, coeffs)) = coeff_boxes(&mut r, &a, &dm, bits)? {
            let abs_sq: Vec<Interval> = coeffs.iter().map(|c| c.norm_sq()).collect();
            let fwd = weights(&roots, false, prec).and_then(|w| threshold(&w, &abs_sq, dom, prec));
            let bwd = match smallest {
                Some(s) => weights(&roots, true, prec)
                    .and_then(|w| threshold(&w, &abs_sq, s, prec))
                    .map(Some),
                None => Some(None),
            };
            if let (Some(n0), Some(back)) = (fwd, bwd) {
                return Ok(BoundVerdict::Decided {
                    zeros: collect_zeros(spec, n0, reversible, back)?,
                    threshold: n0,
                });
            }
        }
        bits *= 2;
    }
    Ok(BoundVerdict::Inconclusive)
}

fn collect_zeros(spec: &LrsSpec, n0: u64, reversible: bool, back: Option<u64>) -> Result<ZeroSet> {
    let nonnegative = spec
        .forward_terms(n0 as usize + 1)
        .iter()
        .enumerate()
        .filter(|(_, x)| x.is_zero())
        .map(|(n, _)| n as u64)
        .collect();
    let (negative, backward) = if reversible {
        let depth = back.unwrap_or(n0);
        let mut neg: Vec<i64> = spec
            .backward_terms(depth as usize)?
            .iter()
            .enumerate()
            .filter(|(_, x)| x.is_zero())
            .map(|(k, _)| -(k as i64) - 1)
            .collect();
        neg.reverse();
        (
            neg,
            if back.is_some() {
                Backward::Complete
            } else {
                Backward::UpTo(depth)
            },
        )
    } else {
        (Vec::new(), Backward::NotReversible)
    };
    Ok(ZeroSet {
        nonnegative,
        negative,
        backward,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PositivityVerdict {
    /// `X_n >= 0` for every `n >= 0`.
    Positive,
    /// The first `n` with `X_n < 0`.
    NotPositive(u64),
    /// No negative term up to the cap, and no proof beyond it.
    BoundedOnly { checked: u64 },
}

fn first_negative(terms: &[BigInt]) -> Option<u64> {
    terms.iter().position(|x| x.is_negative()).map(|n| n as u64)
}

/// Sign of a real root's enclosure, refined until it excludes zero.
fn real_sign(r: &mut Refiner<'_>, i: usize) -> Result<i32> {
    let mut bits = 32;
    loop {
        let b = r.enclose(i, bits)?;
        if !b.re.contains_zero() {
            return Ok(b.re.lo.signum());
        }
        bits *= 2;
        if bits > 1 << 15 {
            return Err(Error::PrecisionExhausted("sign of a real root".into()));
        }
    }
}

/// Whether `X_n >= 0` for all `n >= 0`, searching at most `cap` terms when no
/// certificate applies.
pub fn positivity_check(spec: &LrsSpec, cap: u64) -> Result<PositivityVerdict> {
    positivity_check_with_cap(spec, cap, DEFAULT_PRECISION_CAP)
}

pub fn positivity_check_with_cap(
    spec: &LrsSpec,
    cap: u64,
    precision_cap: u32,
) -> Result<PositivityVerdict> {
    if spec.is_zero_sequence() {
        return Ok(PositivityVerdict::Positive);
    }
    let bounded = |spec: &LrsSpec| -> PositivityVerdict {
        match first_negative(&spec.forward_terms(cap as usize + 1)) {
            Some(n) => PositivityVerdict::NotPositive(n),
            None => PositivityVerdict::BoundedOnly { checked: cap },
        }
    };
    let m = minimal_poly(spec)?;
    let sf = squarefree_part(&m)?;
    let rs = isolate_roots(&sf)?;
    let dom = dominant_class(&rs)?;
    let mut r = Refiner::new(&rs);
    let mut positive_dominant = false;
    for &i in &dom {
        if rs.is_real(i) && real_sign(&mut r, i)? > 0 {
            positive_dominant = true;
        }
    }
    if !positive_dominant {
        // infinitely many negative terms exist; the cap only bounds the search
        return Ok(bounded(spec));
    }
    let simple = all_simple(&rs, &repeated_part(&m)?, &dom)?;
    if dom.len() != 1 || !simple || !is_squarefree(&m) {
        return Ok(bounded(spec));
    }
    let dom_index = dom[0];
    let a = numerator(&m, &spec.forward_terms(m.degree()));
    let dm = m.derivative();
    let mut bits = BASE_BITS;
    for _ in 0..=precision_cap {
        let prec = bits + 16;
        if let Some((roots, coeffs)) = coeff_boxes(&mut r, &a, &dm, bits)? {
            let c = &coeffs[dom_index].re;
            let abs_sq: Vec<Interval> = coeffs.iter().map(|c| c.norm_sq()).collect();
            let n0 =
                weights(&roots, false, prec).and_then(|w| threshold(&w, &abs_sq, dom_index, prec));
            if let (Some(n0), false) = (n0, c.contains_zero()) {
                // past n0 every term has the sign of c
                let terms = spec.forward_terms(n0 as usize + 2);
                return Ok(match first_negative(&terms) {
                    Some(n) => PositivityVerdict::NotPositive(n),
                    None => PositivityVerdict::Positive,
                });
            }
        }
        bits *= 2;
    }
    Ok(bounded(spec))
}
