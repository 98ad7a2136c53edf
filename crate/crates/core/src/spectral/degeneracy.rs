//! Degeneracy (ratios of roots that are roots of unity) and the H1/H2 hypotheses.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{
    cyclotomic, cyclotomic_factors, full_ratio_polynomial, is_squarefree, squarefree_part,
    IntPolynomial,
};
use crate::roots::{
    candidates_with, dominant_class_with, isolate_roots, ComplexBox, DComplex, Dyadic, Refiner,
    RootSystem,
};

const PRECISION_CAP: i64 = 1 << 15;

/// Two roots whose ratio is a primitive `order`-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegeneracyWitness {
    pub pair: (usize, usize),
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    /// At least four distinct roots of maximal modulus.
    pub h1: bool,
    /// No ratio of two distinct roots is a root of unity.
    pub h2: bool,
    pub dominant_count: usize,
    pub witnesses: Vec<DegeneracyWitness>,
}

/// Primitive polynomial of degree `d^2 - d` whose roots are the ratios
/// `l_i / l_j`, `i != j`, of the roots of the squarefree `f`.
pub fn ratio_polynomial(f: &IntPolynomial) -> Result<IntPolynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let d = f.degree();
    if d <= 1 {
        return Ok(IntPolynomial::one());
    }
    let full = full_ratio_polynomial(f)?;
    let diagonal = IntPolynomial::from_i64s(&[-1, 1]).pow(d as u32);
    full.div_exact(&diagonal)
        .map(|q| q.normalized())
        .ok_or_else(|| Error::Internal("(x-1)^d does not divide the ratio polynomial".into()))
}

fn check_monic_unit_free(f: &IntPolynomial) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(())
}

/// Witnesses for the squarefree part of `f`, indexed into
/// `isolate_roots(squarefree_part(f))`. Empty iff `f` is non-degenerate.
pub fn degeneracy_test(f: &IntPolynomial) -> Result<Vec<DegeneracyWitness>> {
    check_monic_unit_free(f)?;
    let sf = squarefree_part(f)?;
    if sf.degree() < 2 {
        return Ok(Vec::new());
    }
    degeneracy_witnesses(&isolate_roots(&sf)?)
}

/// Witness pairs among the roots of an isolated system.
pub fn degeneracy_witnesses(rs: &RootSystem) -> Result<Vec<DegeneracyWitness>> {
    if rs.degree() < 2 {
        return Ok(Vec::new());
    }
    let q = ratio_polynomial(rs.poly())?;
    let (orders, _) = cyclotomic_factors(&q);
    let mut r = Refiner::new(rs);
    let mut out = Vec::new();
    for (n, mult) in orders {
        let phi = cyclotomic(n);
        let expected = phi.degree() * mult;
        for (i, j) in match_pairs(&mut r, &phi, expected)? {
            if i < j {
                out.push(DegeneracyWitness {
                    pair: (i, j),
                    order: n,
                });
            }
        }
    }
    Ok(out)
}

fn powers(z: &ComplexBox, m: usize, prec: i64) -> Vec<ComplexBox> {
    let mut p = vec![ComplexBox::point(&DComplex::real(Dyadic::one()))];
    for k in 1..=m {
        p.push(p[k - 1].mul(z).round_out(prec));
    }
    p
}

/// Enclosure of `y^m phi(x / y)` where `m = deg phi`.
fn homogeneous_eval(
    phi: &IntPolynomial,
    xp: &[ComplexBox],
    yp: &[ComplexBox],
    prec: i64,
) -> ComplexBox {
    let m = phi.degree();
    let mut acc = ComplexBox::point(&DComplex::zero());
    for (k, c) in phi.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = xp[k]
            .mul(&yp[m - k])
            .round_out(prec)
            .scale(&Dyadic::from_int(c.clone()));
        acc = acc.add(&term);
    }
    acc
}

/// The ordered pairs whose ratio is a root of `phi`; exactly `expected` of them exist.
fn match_pairs(
    r: &mut Refiner<'_>,
    phi: &IntPolynomial,
    expected: usize,
) -> Result<Vec<(usize, usize)>> {
    let d = r.system().degree();
    let m = phi.degree();
    let mut bits: i64 = 32;
    loop {
        let prec = bits + 16;
        let pw: Vec<Vec<ComplexBox>> = (0..d)
            .map(|i| Ok(powers(&r.enclose(i, bits)?, m, prec)))
            .collect::<Result<_>>()?;
        let mut hits = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if i != j && homogeneous_eval(phi, &pw[i], &pw[j], prec).contains_zero() {
                    hits.push((i, j));
                }
            }
        }
        if hits.len() == expected {
            return Ok(hits);
        }
        if hits.len() < expected {
            return Err(Error::Internal(
                "lost a root-of-unity ratio during refinement".into(),
            ));
        }
        bits *= 2;
        if bits > PRECISION_CAP {
            return Err(Error::PrecisionExhausted(
                "matching root-of-unity ratios".into(),
            ));
        }
    }
}

/// H1 and H2 for monic `f` with `f(0) != 0`, on its squarefree part.
pub fn hypothesis_check(f: &IntPolynomial) -> Result<HypothesisReport> {
    check_monic_unit_free(f)?;
    let sf = squarefree_part(f)?;
    if sf.degree() == 0 {
        return Ok(HypothesisReport {
            h1: false,
            h2: true,
            dominant_count: 0,
            witnesses: Vec::new(),
        });
    }
    let rs = isolate_roots(&sf)?;
    let mut r = Refiner::new(&rs);
    let dominant_count = dominant_class_with(&mut r)?.len();
    let witnesses = degeneracy_witnesses(&rs)?;
    Ok(HypothesisReport {
        h1: dominant_count >= 4,
        h2: witnesses.is_empty(),
        dominant_count,
        witnesses,
    })
}

/// `h1 && h2` without recovering witnesses, rejecting early on coarse enclosures.
pub(crate) fn h1_and_h2(f: &IntPolynomial) -> Result<bool> {
    check_monic_unit_free(f)?;
    let sf = squarefree_part(f)?;
    if sf.degree() < 4 {
        return Ok(false);
    }
    let rs = isolate_roots(&sf)?;
    let mut r = Refiner::new(&rs);
    if candidates_with(&mut r, 48)?.len() < 4 || dominant_class_with(&mut r)?.len() < 4 {
        return Ok(false);
    }
    Ok(cyclotomic_factors(&ratio_polynomial(&sf)?).0.is_empty())
}

/// Degree ten, squarefree, unit constant term, and a dominant class of nine
/// roots of which exactly one is real; the tenth root is then strictly smaller.
pub(crate) fn order10_pattern(f: &IntPolynomial) -> Result<bool> {
    if f.degree() != 10 || !f.constant_term().abs().is_one() || !is_squarefree(f) {
        return Ok(false);
    }
    let rs = isolate_roots(f)?;
    let mut r = Refiner::new(&rs);
    if candidates_with(&mut r, 48)?.len() < 9 {
        return Ok(false);
    }
    let top = dominant_class_with(&mut r)?;
    Ok(top.len() == 9 && top.iter().filter(|&&i| rs.is_real(i)).count() == 1)
}
