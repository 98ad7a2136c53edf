//! Galois groups of quartics and of palindromic octics satisfying H1 and H2.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::{is_square, primes_from};
use crate::poly::{
    discriminant, factor_degrees_mod, is_irreducible, is_squarefree, palindrome_reduce,
    rational_roots, IntPolynomial,
};
use crate::spectral::{hypothesis_check, HypothesisReport};

/// The transitive subgroups of `S4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuarticGroupTag {
    S4,
    A4,
    D4,
    C4,
    K4,
}

impl fmt::Display for QuarticGroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            QuarticGroupTag::S4 => "S4",
            QuarticGroupTag::A4 => "A4",
            QuarticGroupTag::D4 => "D4",
            QuarticGroupTag::C4 => "C4",
            QuarticGroupTag::K4 => "K4",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OcticGroup {
    S4xC2,
    A4xC2,
}

impl fmt::Display for OcticGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OcticGroup::S4xC2 => "S4xC2",
            OcticGroup::A4xC2 => "A4xC2",
        })
    }
}

/// Degrees of the irreducible factors modulo `prime`, ascending; `None` when
/// the prime divides the discriminant or the leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSample {
    pub prime: u64,
    pub degrees: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OcticGaloisReport {
    pub quartic: IntPolynomial,
    pub quartic_group: QuarticGroupTag,
    pub full_group: OcticGroup,
    pub frobenius_samples: Vec<FrobeniusSample>,
}

/// Quartic part of a palindromic octic; the product lift is reported only
/// when the octic meets the hypotheses under which it is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelaxedGaloisReport {
    pub quartic: IntPolynomial,
    pub quartic_group: QuarticGroupTag,
    pub hypotheses: HypothesisReport,
    pub full_group: Option<OcticGroup>,
}

fn is_square_or_zero(n: &BigInt) -> bool {
    n.is_zero() || is_square(n)
}

/// Whether `x^2 + b x + c` splits over `Q(sqrt(disc))`.
fn splits_over(b: &BigInt, c: &BigInt, disc: &BigInt) -> bool {
    let delta = b * b - BigInt::from(4) * c;
    is_square_or_zero(&delta) || is_square(&(&delta * disc))
}

/// Galois group of a monic irreducible quartic via its resolvent cubic.
pub fn quartic_galois(g: &IntPolynomial) -> Result<QuarticGroupTag> {
    if g.degree() != 4 || g.is_zero() {
        return Err(Error::NotQuartic);
    }
    if !g.is_monic() {
        return Err(Error::NotMonic);
    }
    if !is_irreducible(g)? {
        return Err(Error::NotIrreducible);
    }
    let (p, q, r, s) = (g.coeff(3), g.coeff(2), g.coeff(1), g.coeff(0));
    let four = BigInt::from(4);
    let cubic = IntPolynomial::new(vec![
        -(&p * &p * &s - &four * &q * &s + &r * &r),
        &p * &r - &four * &s,
        -q.clone(),
        BigInt::from(1),
    ]);
    let disc = discriminant(g)?;
    let roots = rational_roots(&cubic)?;
    Ok(match roots.len() {
        0 if is_square(&disc) => QuarticGroupTag::A4,
        0 => QuarticGroupTag::S4,
        1 => {
            let t = roots[0].to_integer();
            if splits_over(&-t.clone(), &s, &disc) && splits_over(&p, &(&q - &t), &disc) {
                QuarticGroupTag::C4
            } else {
                QuarticGroupTag::D4
            }
        }
        _ => QuarticGroupTag::K4,
    })
}

fn check_octic(f: &IntPolynomial) -> Result<()> {
    if f.degree() != 8 || !f.is_monic() || !f.is_palindromic() {
        return Err(Error::NotPalindromicOctic);
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    if !is_irreducible(f)? {
        return Err(Error::NotIrreducible);
    }
    Ok(())
}

fn lift(group: QuarticGroupTag) -> Result<OcticGroup> {
    match group {
        QuarticGroupTag::S4 => Ok(OcticGroup::S4xC2),
        QuarticGroupTag::A4 => Ok(OcticGroup::A4xC2),
        other => Err(Error::TheoremViolation(format!(
            "quartic group {other} is excluded for this octic"
        ))),
    }
}

fn reduced_group(quartic: &IntPolynomial) -> Result<QuarticGroupTag> {
    quartic_galois(quartic).map_err(|e| match e {
        Error::NotIrreducible => Error::TheoremViolation("the reduced quartic is reducible".into()),
        e => e,
    })
}

/// Galois group of a monic irreducible palindromic octic with H1 and H2.
pub fn octic_palindrome_galois(f: &IntPolynomial) -> Result<OcticGaloisReport> {
    check_octic(f)?;
    let h = hypothesis_check(f)?;
    if !(h.h1 && h.h2) {
        return Err(Error::PreconditionH1H2 { h1: h.h1, h2: h.h2 });
    }
    let quartic = palindrome_reduce(f)?;
    let quartic_group = reduced_group(&quartic)?;
    let full_group = lift(quartic_group)?;
    let primes = admissible_primes(f, 50);
    Ok(OcticGaloisReport {
        quartic,
        quartic_group,
        full_group,
        frobenius_samples: frobenius_sample(f, &primes),
    })
}

/// Like [`octic_palindrome_galois`] but without requiring H1 and H2.
pub fn octic_palindrome_galois_relaxed(f: &IntPolynomial) -> Result<RelaxedGaloisReport> {
    check_octic(f)?;
    let hypotheses = hypothesis_check(f)?;
    let quartic = palindrome_reduce(f)?;
    let quartic_group = quartic_galois(&quartic)?;
    let full_group = if hypotheses.h1 && hypotheses.h2 {
        Some(lift(quartic_group)?)
    } else {
        None
    };
    Ok(RelaxedGaloisReport {
        quartic,
        quartic_group,
        hypotheses,
        full_group,
    })
}

fn bad_modulus(f: &IntPolynomial) -> Option<BigInt> {
    if f.is_zero() || f.degree() == 0 {
        return None;
    }
    let d = discriminant(f).ok()?;
    (!d.is_zero()).then(|| d * f.leading())
}

/// The first `count` primes dividing neither the discriminant nor the leading coefficient.
pub fn admissible_primes(f: &IntPolynomial, count: usize) -> Vec<u64> {
    match bad_modulus(f) {
        Some(m) => primes_from(2)
            .filter(|&p| !m.is_multiple_of(&BigInt::from(p)))
            .take(count)
            .collect(),
        None => Vec::new(),
    }
}

/// Factor degree patterns of `f` modulo each prime.
pub fn frobenius_sample(f: &IntPolynomial, primes: &[u64]) -> Vec<FrobeniusSample> {
    let bad = bad_modulus(f);
    primes
        .iter()
        .map(|&p| {
            let degrees = match &bad {
                Some(m) if !m.is_multiple_of(&BigInt::from(p)) => {
                    factor_degrees_mod(f, p).map(|mut d| {
                        d.sort_unstable();
                        d
                    })
                }
                _ => None,
            };
            FrobeniusSample { prime: p, degrees }
        })
        .collect()
}
