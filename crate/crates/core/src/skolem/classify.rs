//! Which decision procedure, if any, covers a given sequence.

use num_traits::{One, Signed};

use super::sequence::{minimal_poly, LrsSpec};
use crate::error::{Error, Result};
use crate::poly::{cyclotomic_product_test, squarefree_part};
use crate::roots::{dominant_class, isolate_roots, ComplexBox, Refiner, RootSystem};
use crate::spectral::{degeneracy_witnesses, DegeneracyWitness};
use crate::IntPolynomial;

const SIMPLICITY_BITS_CAP: i64 = 1 << 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LrsClass {
    /// Non-degenerate and every characteristic root is a root of unity.
    Cyclotomic,
    /// Some ratio of distinct roots is a root of unity; split along residue classes.
    DegenerateSML,
    /// One simple dominant root; zeros are effectively bounded.
    UniqueDominantEffective,
    /// At most three simple dominant roots.
    MSTDecidable,
    /// Reversible, non-degenerate, four or more dominant roots.
    HardReversible,
    Unknown,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClassFlags {
    /// Reversible of order at most seven.
    pub order_le7_reversible_guarantee: bool,
    /// Simple and reversible of order at most ten.
    pub positivity_decidable_order_le10: bool,
    /// An order-five relation with trailing coefficient `+-1`.
    pub unit_norm_order5_guarantee: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub minimal_poly: IntPolynomial,
    pub order: usize,
    pub reversible: bool,
    pub degenerate: bool,
    pub witnesses: Vec<DegeneracyWitness>,
    /// Distinct dominant roots.
    pub dominant_count: usize,
    pub dominant_simple: bool,
    pub class: LrsClass,
    pub flags: ClassFlags,
    pub zero_everywhere: bool,
}

/// Squarefree product of the roots of `m` of multiplicity at least two.
pub(crate) fn repeated_part(m: &IntPolynomial) -> Result<IntPolynomial> {
    let g = m.gcd(&m.derivative());
    if g.is_constant() {
        Ok(IntPolynomial::one())
    } else {
        squarefree_part(&g)
    }
}

/// Whether each listed root of `rs` (the squarefree part) avoids `repeated`.
pub(crate) fn all_simple(rs: &RootSystem, repeated: &IntPolynomial, idx: &[usize]) -> Result<bool> {
    if repeated.is_constant() {
        return Ok(true);
    }
    let rest = rs.poly().div_exact(repeated).ok_or_else(|| {
        Error::Internal("repeated part does not divide the squarefree part".into())
    })?;
    let mut r = Refiner::new(rs);
    for &i in idx {
        let mut bits = 32;
        loop {
            let b = r.enclose(i, bits)?;
            if !ComplexBox::eval(repeated, &b).contains_zero() {
                break;
            }
            if !ComplexBox::eval(&rest, &b).contains_zero() {
                return Ok(false);
            }
            bits *= 2;
            if bits > SIMPLICITY_BITS_CAP {
                return Err(Error::PrecisionExhausted("root multiplicity".into()));
            }
        }
    }
    Ok(true)
}

/// Minimal polynomial, reversibility, degeneracy and dominance of a sequence.
pub fn classify(spec: &LrsSpec) -> Result<ClassificationReport> {
    let m = minimal_poly(spec)?;
    let order = m.degree();
    let reversible = m.constant_term().abs().is_one();
    let unit_relation = spec.order() == 5 && spec.rec_coeffs()[4].abs().is_one();
    if order == 0 {
        return Ok(ClassificationReport {
            minimal_poly: m,
            order,
            reversible: true,
            degenerate: false,
            witnesses: Vec::new(),
            dominant_count: 0,
            dominant_simple: true,
            class: LrsClass::Cyclotomic,
            flags: ClassFlags {
                order_le7_reversible_guarantee: true,
                positivity_decidable_order_le10: true,
                unit_norm_order5_guarantee: unit_relation,
            },
            zero_everywhere: true,
        });
    }
    let sf = squarefree_part(&m)?;
    let simple = sf.degree() == order;
    let rs = isolate_roots(&sf)?;
    let witnesses = degeneracy_witnesses(&rs)?;
    let degenerate = !witnesses.is_empty();
    let dominant = dominant_class(&rs)?;
    let dominant_count = dominant.len();
    let dominant_simple = all_simple(&rs, &repeated_part(&m)?, &dominant)?;
    if reversible && !degenerate && order <= 7 && dominant_count >= 4 {
        return Err(Error::TheoremViolation(format!(
            "reversible non-degenerate sequence of order {order} with {dominant_count} dominant roots"
        )));
    }
    let class = if degenerate {
        LrsClass::DegenerateSML
    } else if cyclotomic_product_test(&m)? {
        LrsClass::Cyclotomic
    } else if dominant_count == 1 && dominant_simple {
        LrsClass::UniqueDominantEffective
    } else if dominant_count <= 3 && dominant_simple {
        LrsClass::MSTDecidable
    } else if reversible && dominant_count >= 4 {
        LrsClass::HardReversible
    } else {
        LrsClass::Unknown
    };
    let flags = ClassFlags {
        order_le7_reversible_guarantee: reversible && order <= 7,
        positivity_decidable_order_le10: simple && reversible && order <= 10,
        unit_norm_order5_guarantee: unit_relation || (order == 5 && reversible),
    };
    Ok(ClassificationReport {
        minimal_poly: m,
        order,
        reversible,
        degenerate,
        witnesses,
        dominant_count,
        dominant_simple,
        class,
        flags,
        zero_everywhere: false,
    })
}
