//! Infinite families of palindromic octics with H1 and H2 from power maps.

use crate::error::{Error, Result};
use crate::poly::power_map;
use crate::spectral::hypothesis_check;
use crate::IntPolynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    /// `poly = power_map(seed, power)`.
    pub power: u32,
    pub poly: IntPolynomial,
    pub palindromic: bool,
    pub h1: bool,
    pub h2: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub members: Vec<FamilyMember>,
    pub pairwise_distinct: bool,
}

fn check_seed(seed: &IntPolynomial) -> Result<()> {
    if seed.degree() != 8 || !seed.is_monic() || !seed.is_palindromic() {
        return Err(Error::NotPalindromicOctic);
    }
    let h = hypothesis_check(seed)?;
    if !(h.h1 && h.h2) {
        return Err(Error::PreconditionH1H2 { h1: h.h1, h2: h.h2 });
    }
    Ok(())
}

/// `power_map(seed, n)` for `n = 1 ..= count`, each re-verified.
pub fn family_generate(seed: &IntPolynomial, count: u32) -> Result<Family> {
    check_seed(seed)?;
    let mut members = Vec::with_capacity(count as usize);
    for n in 1..=count {
        let poly = power_map(seed, n)?;
        let h = hypothesis_check(&poly)?;
        let member = FamilyMember {
            power: n,
            palindromic: poly.is_palindromic(),
            h1: h.h1,
            h2: h.h2,
            poly,
        };
        if !(member.palindromic && member.h1 && member.h2) {
            return Err(Error::TheoremViolation(format!(
                "power {n} of the seed loses H1, H2 or palindromy"
            )));
        }
        members.push(member);
    }
    let pairwise_distinct = members
        .iter()
        .enumerate()
        .all(|(i, a)| members[i + 1..].iter().all(|b| a.poly != b.poly));
    Ok(Family {
        members,
        pairwise_distinct,
    })
}
