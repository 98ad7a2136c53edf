//! Splitting a degenerate sequence into non-degenerate subsequences along
//! residue classes.

use num_bigint::BigInt;
use num_traits::Zero;

use super::sequence::{minimal_poly, LrsSpec};
use crate::error::{Error, Result};
use crate::numtheory::lcm_u64;
use crate::poly::{power_map, squarefree_part};
use crate::roots::isolate_roots;
use crate::spectral::degeneracy_witnesses;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmlDecomposition {
    pub modulus: u64,
    /// Residues `r` with `X_{r + kM} = 0` for every `k`.
    pub vanishing_residues: Vec<u64>,
    /// `(r, Y)` with `Y_k = X_{r + kM}`, for the remaining residues.
    pub residual: Vec<(u64, LrsSpec)>,
}

/// `Y_k = X_{r + kM}` as a sequence of the same order, with characteristic
/// polynomial `power_map(m, M)`.
pub(crate) fn subsequence(
    spec: &LrsSpec,
    m: &crate::IntPolynomial,
    modulus: u64,
    residue: u64,
) -> Result<LrsSpec> {
    let d = m.degree();
    let stride = u32::try_from(modulus).map_err(|_| Error::Internal("modulus too large".into()))?;
    let p = power_map(m, stride)?;
    let terms = spec.forward_terms(residue as usize + (d.max(1) - 1) * modulus as usize + 1);
    let inits: Vec<BigInt> = (0..d)
        .map(|k| terms[residue as usize + k * modulus as usize].clone())
        .collect();
    LrsSpec::from_char_poly(&p, inits)
}

pub fn sml_decompose(spec: &LrsSpec) -> Result<SmlDecomposition> {
    let m = minimal_poly(spec)?;
    if m.degree() < 2 {
        return Err(Error::NotDegenerate);
    }
    let sf = squarefree_part(&m)?;
    let witnesses = if sf.degree() < 2 {
        Vec::new()
    } else {
        degeneracy_witnesses(&isolate_roots(&sf)?)?
    };
    if witnesses.is_empty() {
        return Err(Error::NotDegenerate);
    }
    let modulus = witnesses.iter().fold(1, |acc, w| lcm_u64(acc, w.order));
    let mut vanishing_residues = Vec::new();
    let mut residual = Vec::new();
    for r in 0..modulus {
        let sub = subsequence(spec, &m, modulus, r)?;
        if sub.inits().iter().all(|x| x.is_zero()) {
            vanishing_residues.push(r);
            continue;
        }
        let sm = squarefree_part(&minimal_poly(&sub)?)?;
        if sm.degree() >= 2 && !degeneracy_witnesses(&isolate_roots(&sm)?)?.is_empty() {
            return Err(Error::Internal(format!(
                "residue {r} mod {modulus} is still degenerate"
            )));
        }
        residual.push((r, sub));
    }
    Ok(SmlDecomposition {
        modulus,
        vanishing_residues,
        residual,
    })
}
