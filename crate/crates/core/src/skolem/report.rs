//! End-to-end zero-set analysis: pick the strongest applicable method.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bound::{dominant_root_bound_with_cap, BoundVerdict};
use super::classify::{classify, ClassificationReport, LrsClass};
use super::sequence::{minimal_poly, zero_search_cancellable, Backward, LrsSpec, ZeroSet};
use super::sml::{sml_decompose, subsequence, SmlDecomposition};
use crate::cancel::CancelToken;
use crate::error::{Error, Result};
use crate::numtheory::lcm_u64;
use crate::poly::{cyclotomic_factors, cyclotomic_product_test, rational_roots};
use crate::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SkolemMethod {
    ZeroSequence,
    DominantRootBound,
    SmlDecomposition,
    /// All roots are roots of unity; each residue class is a polynomial in `k`.
    PolynomialResidues,
    BoundedSearch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkolemReport {
    pub classification: ClassificationReport,
    pub method: SkolemMethod,
    /// `(M, residues)`: `X_n = 0` whenever `n mod M` is listed.
    pub progressions: Option<(u64, Vec<u64>)>,
    /// Zeros outside the progressions.
    pub zeros: ZeroSet,
    /// Whether `zeros` lists every zero with `n >= 0`.
    pub complete: bool,
    pub search_bound: u64,
}

/// Integers `k` with `Y_k = 0`, where `Y` has minimal polynomial `(x-1)^j`
/// and so is a nonzero polynomial in `k` of degree below `j`.
fn polynomial_zeros(y: &LrsSpec) -> Result<Vec<i64>> {
    let j = minimal_poly(y)?.degree();
    // Y_k = sum_i D_i binom(k, i); scale by (j-1)! to stay integral
    let mut diff = y.forward_terms(j);
    let mut scale = BigInt::one();
    for i in 1..j {
        scale *= BigInt::from(i);
    }
    let mut p = IntPolynomial::zero();
    let mut falling = IntPolynomial::one();
    let mut fact = BigInt::one();
    for i in 0..j {
        p = &p + &falling.scale(&(&diff[0] * (&scale / &fact)));
        falling = &falling * &IntPolynomial::from_i64s(&[-(i as i64), 1]);
        fact *= BigInt::from(i + 1);
        diff = diff.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    if p.is_zero() {
        return Err(Error::Internal(
            "vanishing residue class treated as polynomial".into(),
        ));
    }
    Ok(rational_roots(&p)?
        .into_iter()
        .filter(|q| q.is_integer())
        .filter_map(|q| i64::try_from(q.to_integer()).ok())
        .collect())
}

fn split_by(spec: &LrsSpec, m: &IntPolynomial, modulus: u64) -> Result<SmlDecomposition> {
    let mut vanishing_residues = Vec::new();
    let mut residual = Vec::new();
    for r in 0..modulus {
        let sub = subsequence(spec, m, modulus, r)?;
        if sub.inits().iter().all(|x| x.is_zero()) {
            vanishing_residues.push(r);
        } else {
            residual.push((r, sub));
        }
    }
    Ok(SmlDecomposition {
        modulus,
        vanishing_residues,
        residual,
    })
}

/// Zeros of a decomposed sequence outside its vanishing classes; `None` when
/// some class admits only a bounded search.
fn decomposed_zeros(
    spec: &LrsSpec,
    sml: &SmlDecomposition,
    cyclotomic: bool,
    cap: u32,
) -> Result<Option<ZeroSet>> {
    let reversible = spec.is_reversible()?;
    let m = sml.modulus as i64;
    let mut ks: Vec<i64> = Vec::new();
    let mut backward_complete = true;
    for (r, y) in &sml.residual {
        let r = *r as i64;
        if cyclotomic {
            ks.extend(polynomial_zeros(y)?.into_iter().map(|k| r + k * m));
            continue;
        }
        match dominant_root_bound_with_cap(y, cap) {
            Ok(BoundVerdict::Decided { zeros, .. }) => {
                ks.extend(zeros.nonnegative.iter().map(|&k| r + k as i64 * m));
                ks.extend(zeros.negative.iter().map(|&k| r + k * m));
                backward_complete &= zeros.backward == Backward::Complete;
            }
            Ok(BoundVerdict::Inconclusive) | Err(Error::PreconditionDominance(_)) => {
                return Ok(None)
            }
            Err(e) => return Err(e),
        }
    }
    ks.sort_unstable();
    let nonnegative = ks.iter().filter(|&&n| n >= 0).map(|&n| n as u64).collect();
    let (negative, backward) = if !reversible {
        (Vec::new(), Backward::NotReversible)
    } else if backward_complete {
        (
            ks.into_iter().filter(|&n| n < 0).collect(),
            Backward::Complete,
        )
    } else {
        (Vec::new(), Backward::UpTo(0))
    };
    Ok(Some(ZeroSet {
        nonnegative,
        negative,
        backward,
    }))
}

fn bounded(
    spec: &LrsSpec,
    c: ClassificationReport,
    bound: u64,
    cancel: &CancelToken,
) -> Result<SkolemReport> {
    Ok(SkolemReport {
        classification: c,
        method: SkolemMethod::BoundedSearch,
        progressions: None,
        zeros: zero_search_cancellable(spec, bound, cancel)?,
        complete: false,
        search_bound: bound,
    })
}

/// Classify, then decide the zero set when a complete method applies and
/// fall back to searching `[-bound, bound]` otherwise.
pub fn skolem_analyze(
    spec: &LrsSpec,
    bound: u64,
    precision_cap: u32,
    cancel: &CancelToken,
) -> Result<SkolemReport> {
    let c = classify(spec)?;
    let report = |c, method, progressions, zeros| SkolemReport {
        classification: c,
        method,
        progressions,
        zeros,
        complete: true,
        search_bound: bound,
    };
    if c.zero_everywhere {
        let zeros = ZeroSet {
            nonnegative: Vec::new(),
            negative: Vec::new(),
            backward: Backward::Complete,
        };
        return Ok(report(
            c,
            SkolemMethod::ZeroSequence,
            Some((1, vec![0])),
            zeros,
        ));
    }
    match c.class {
        LrsClass::UniqueDominantEffective => {
            match dominant_root_bound_with_cap(spec, precision_cap) {
                Ok(BoundVerdict::Decided { zeros, .. }) => {
                    Ok(report(c, SkolemMethod::DominantRootBound, None, zeros))
                }
                Ok(BoundVerdict::Inconclusive) | Err(Error::PreconditionDominance(_)) => {
                    bounded(spec, c, bound, cancel)
                }
                Err(e) => Err(e),
            }
        }
        LrsClass::Cyclotomic | LrsClass::DegenerateSML => {
            let cyclotomic = cyclotomic_product_test(&c.minimal_poly)?;
            let sml = if cyclotomic {
                let stride = cyclotomic_factors(&c.minimal_poly)
                    .0
                    .iter()
                    .fold(1, |acc, &(n, _)| lcm_u64(acc, n));
                split_by(spec, &c.minimal_poly, stride)?
            } else {
                sml_decompose(spec)?
            };
            let method = if cyclotomic {
                SkolemMethod::PolynomialResidues
            } else {
                SkolemMethod::SmlDecomposition
            };
            let progressions = Some((sml.modulus, sml.vanishing_residues.clone()));
            if let Some(zeros) = decomposed_zeros(spec, &sml, cyclotomic, precision_cap)? {
                return Ok(report(c, method, progressions, zeros));
            }
            let mut r = bounded(spec, c, bound, cancel)?;
            let md = sml.modulus;
            let vanishing = &sml.vanishing_residues;
            r.zeros
                .nonnegative
                .retain(|&n| !vanishing.contains(&(n % md)));
            r.zeros
                .negative
                .retain(|&n| !vanishing.contains(&(n.rem_euclid(md as i64) as u64)));
            r.progressions = progressions;
            r.method = SkolemMethod::SmlDecomposition;
            Ok(r)
        }
        _ => bounded(spec, c, bound, cancel),
    }
}
