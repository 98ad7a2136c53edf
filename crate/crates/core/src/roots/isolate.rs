//! Certified isolation of all complex roots of a squarefree integer polynomial.
//!
//! Approximations come from an Aberth iteration. With approximations `z_i`
//! and Weierstrass corrections `W_i = f(z_i) / (lc(f) prod_{j != i} (z_i - z_j))`,
//! every connected component of the union of the disks `|z - z_i| <= n |W_i|`
//! holds as many roots as disks, so pairwise disjoint disks isolate the roots.
//! Centres are made conjugation-symmetric first, so a real centre with an
//! isolated disk certifies a real root.

use num_bigint::BigInt;
use num_complex::Complex64;

use super::aberth;
use super::complex::{ComplexBox, DComplex};
use super::dyadic::{Dyadic, Interval};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

const MAX_PRECISION: i64 = 1 << 15;
const NEWTON_STEPS: usize = 200;

/// Certified enclosures for every root of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct RootSystem {
    poly: IntPolynomial,
    centers: Vec<DComplex>,
    /// Radius of a disk about each centre holding exactly that root; `None` means unbounded.
    isolation: Vec<Option<Dyadic>>,
    boxes: Vec<ComplexBox>,
    conj: Vec<usize>,
}

impl RootSystem {
    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.boxes.len()
    }

    pub fn boxes(&self) -> &[ComplexBox] {
        &self.boxes
    }

    pub fn root_box(&self, i: usize) -> &ComplexBox {
        &self.boxes[i]
    }

    pub fn conj_pairing(&self) -> &[usize] {
        &self.conj
    }

    pub fn conj(&self, i: usize) -> usize {
        self.conj[i]
    }

    pub fn is_real(&self, i: usize) -> bool {
        self.conj[i] == i
    }

    pub fn real_count(&self) -> usize {
        (0..self.degree()).filter(|&i| self.is_real(i)).count()
    }

    pub fn center(&self, i: usize) -> &DComplex {
        &self.centers[i]
    }

    /// Centres as doubles, handy for display and heuristics.
    pub fn approximations(&self) -> Vec<Complex64> {
        self.centers
            .iter()
            .map(|c| {
                let (re, im) = c.to_f64();
                Complex64::new(re, im)
            })
            .collect()
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.degree() {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.degree(),
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn isolation_radius(&self, i: usize) -> Option<&Dyadic> {
        self.isolation[i].as_ref()
    }
}

/// Isolates the roots of a squarefree `f` of degree at least one.
pub fn isolate_roots(f: &IntPolynomial) -> Result<RootSystem> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Err(Error::DegreeTooSmall {
            required: 1,
            actual: 0,
        });
    }
    let f = f.normalized();
    if !crate::poly::is_squarefree(&f) {
        return Err(Error::NotSquarefree);
    }
    let n = f.degree();

    let mut approx: Vec<DComplex> = match aberth::approximate_f64(&f) {
        Some(z) => z
            .iter()
            .filter_map(|c| DComplex::from_f64(c.re, c.im))
            .collect(),
        None => Vec::new(),
    };
    if approx.len() == n {
        if let Some(rs) = try_certify(&f, &approx, 24) {
            return Ok(rs);
        }
    } else {
        approx = fallback_start(&f);
    }
    let mut prec: i64 = 106;
    while prec <= MAX_PRECISION {
        approx = aberth::refine_all(&f, &approx, prec, 60);
        if let Some(rs) = try_certify(&f, &approx, prec / 2) {
            return Ok(rs);
        }
        prec *= 2;
    }
    Err(Error::PrecisionExhausted(format!("root isolation of {f}")))
}

fn fallback_start(f: &IntPolynomial) -> Vec<DComplex> {
    let n = f.degree();
    // Cauchy-type radius from coefficient bit sizes
    let lc_bits = f.leading().bits() as i64;
    let top = f
        .coeffs()
        .iter()
        .map(|c| c.bits() as i64)
        .max()
        .unwrap_or(0);
    let r = Dyadic::pow2(top - lc_bits + 1).to_f64().max(1.0);
    (0..n)
        .filter_map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            let z = Complex64::from_polar(r, t);
            DComplex::from_f64(z.re, z.im)
        })
        .collect()
}

/// Snaps approximations to a conjugation-symmetric configuration. Real
/// candidates get imaginary part exactly zero.
fn snap(z: &[DComplex], tol_bits: i64) -> Option<(Vec<DComplex>, Vec<usize>)> {
    let n = z.len();
    let tol = Dyadic::pow2(-tol_bits);
    let mut centers = vec![DComplex::zero(); n];
    let mut conj = vec![usize::MAX; n];
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for (k, v) in z.iter().enumerate() {
        let scale = Dyadic::max(&Dyadic::one(), &v.re.abs().add(&v.im.abs()));
        if v.im.abs() <= tol.mul(&scale) {
            centers[k] = DComplex::real(v.re.clone());
            conj[k] = k;
        } else if v.im.signum() > 0 {
            upper.push(k);
        } else {
            lower.push(k);
        }
    }
    if upper.len() != lower.len() {
        return None;
    }
    let mut used = vec![false; lower.len()];
    for &u in &upper {
        let target = z[u].conj();
        let (best, _) = lower
            .iter()
            .enumerate()
            .filter(|(li, _)| !used[*li])
            .map(|(li, &l)| (li, z[l].sub(&target).norm_sq()))
            .min_by(|a, b| a.1.cmp(&b.1))?;
        used[best] = true;
        let l = lower[best];
        let c = DComplex::new(z[u].re.add(&z[l].re).shl(-1), z[u].im.sub(&z[l].im).shl(-1));
        centers[l] = c.conj();
        centers[u] = c;
        conj[u] = l;
        conj[l] = u;
    }
    Some((centers, conj))
}

fn log2_ratio(a: &Dyadic, b: &Dyadic) -> i64 {
    if a.is_zero() {
        0
    } else {
        a.log2_floor() - b.log2_floor()
    }
}

fn try_certify(f: &IntPolynomial, approx: &[DComplex], tol_bits: i64) -> Option<RootSystem> {
    let (centers, conj) = snap(approx, tol_bits)?;
    let n = centers.len();
    let lc2 = Dyadic::from_int(f.leading() * f.leading());
    let n2 = Dyadic::from_int(BigInt::from(n * n));
    let mut radii: Vec<Dyadic> = Vec::with_capacity(n);
    for i in 0..n {
        if conj[i] < i {
            radii.push(radii[conj[i]].clone());
            continue;
        }
        let fz = DComplex::eval(f, &centers[i]);
        if fz.is_zero() {
            radii.push(Dyadic::zero());
            continue;
        }
        let mut prod = Dyadic::one();
        for j in 0..n {
            if j != i {
                let d2 = centers[i].sub(&centers[j]).norm_sq();
                if d2.is_zero() {
                    return None;
                }
                prod = prod.mul(&d2);
            }
        }
        let num = n2.mul(&fz.norm_sq());
        let den = lc2.mul(&prod);
        let k = 24 - log2_ratio(&num, &den) / 2;
        radii.push(Dyadic::sqrt_ratio_upper(&num, &den, k));
    }
    let squares: Vec<ComplexBox> = (0..n)
        .map(|i| ComplexBox::square(&centers[i], &radii[i]))
        .collect();
    for i in 0..n {
        for j in (i + 1)..n {
            if squares[i].overlaps(&squares[j]) {
                return None;
            }
        }
    }
    let isolation = isolation_radii(&centers, &radii);
    let boxes: Vec<ComplexBox> = (0..n)
        .map(|i| {
            if conj[i] == i {
                ComplexBox::new(Interval::ball(&centers[i].re, &radii[i]), Interval::zero())
            } else {
                squares[i].clone()
            }
        })
        .collect();

    // deterministic order: by real part, then imaginary part
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        centers[a]
            .re
            .cmp(&centers[b].re)
            .then_with(|| centers[a].im.cmp(&centers[b].im))
    });
    let mut inv = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        inv[old] = new;
    }
    Some(RootSystem {
        poly: f.clone(),
        centers: order.iter().map(|&o| centers[o].clone()).collect(),
        isolation: order.iter().map(|&o| isolation[o].clone()).collect(),
        boxes: order.iter().map(|&o| boxes[o].clone()).collect(),
        conj: order.iter().map(|&o| inv[conj[o]]).collect(),
    })
}

/// Enlarges each inclusion disk to halfway towards its nearest neighbour disk;
/// the result still excludes every other root.
fn isolation_radii(centers: &[DComplex], radii: &[Dyadic]) -> Vec<Option<Dyadic>> {
    let n = centers.len();
    (0..n)
        .map(|i| {
            let mut gap: Option<Dyadic> = None;
            for j in 0..n {
                if j == i {
                    continue;
                }
                let d2 = centers[i].sub(&centers[j]).norm_sq();
                let k = 40 - log2_ratio(&d2, &Dyadic::one()) / 2;
                let dist = Dyadic::sqrt_ratio_lower(&d2, &Dyadic::one(), k);
                let room = dist.sub(&radii[j]);
                gap = Some(match gap {
                    Some(g) => Dyadic::min(&g, &room),
                    None => room,
                });
            }
            gap.map(|g| {
                let mid = radii[i].add(&g).shl(-1);
                Dyadic::max(&mid, &radii[i])
            })
        })
        .collect()
}

/// Newton descent towards root `i` from `start`, certified by the inclusion
/// disk `|z - w| <= n |f(w) / f'(w)|`, which always holds a root. Returns the
/// final iterate and a box of width and height at most `eps`.
pub(crate) fn newton_enclose(
    rs: &RootSystem,
    df: &IntPolynomial,
    i: usize,
    start: &DComplex,
    current: &ComplexBox,
    eps: &Dyadic,
    start_prec: i64,
) -> Result<(DComplex, ComplexBox)> {
    let f = &rs.poly;
    let n2 = Dyadic::from_int(BigInt::from(f.degree() * f.degree()));
    let real = rs.is_real(i);
    let c = &rs.centers[i];
    let target_bits = 2 - eps.log2_floor();
    let magnitude = (c.re.abs().add(&c.im.abs()).add(&Dyadic::one()))
        .log2_floor()
        .max(0);
    let cap = target_bits + magnitude + 64;
    let mut prec: i64 = start_prec.clamp(32, cap.max(32));
    let mut z = start.clone();
    for _ in 0..NEWTON_STEPS {
        let fz = DComplex::eval(f, &z);
        let enclosure = if fz.is_zero() {
            Some((ComplexBox::point(&z), Dyadic::zero()))
        } else {
            let dfz = DComplex::eval(df, &z);
            if dfz.is_zero() {
                None
            } else {
                let rho =
                    Dyadic::sqrt_ratio_upper(&n2.mul(&fz.norm_sq()), &dfz.norm_sq(), prec + 8);
                let b = if real {
                    ComplexBox::new(Interval::ball(&z.re, &rho), Interval::zero())
                } else {
                    ComplexBox::square(&z, &rho)
                };
                Some((b, rho))
            }
        };
        if let Some((b, rho)) = &enclosure {
            if rho.shl(1) <= *eps && inside_isolation(rs, i, &z, rho) {
                let b = b.intersect(current).ok_or_else(|| {
                    Error::Internal("refined enclosure left its isolating box".into())
                })?;
                return Ok((z, b));
            }
        }
        if fz.is_zero() {
            // exact value outside the isolating disk: should not happen
            return Err(Error::Internal(
                "Newton iterate converged to a foreign root".into(),
            ));
        }
        let dfz = DComplex::eval(df, &z);
        let step = fz
            .div_round(&dfz, prec)
            .unwrap_or_else(|| DComplex::real(Dyadic::pow2(-prec)));
        z = z.sub(&step).round_to(prec);
        if real {
            z.im = Dyadic::zero();
        }
        prec = (prec * 2).min(cap);
    }
    Err(Error::PrecisionExhausted(format!(
        "refining root {i} of {f}"
    )))
}

fn inside_isolation(rs: &RootSystem, i: usize, z: &DComplex, rho: &Dyadic) -> bool {
    match rs.isolation_radius(i) {
        None => true,
        Some(r) => {
            let d2 = z.sub(&rs.centers[i]).norm_sq();
            let bits = 80 - log2_ratio(&d2, &Dyadic::one()).min(0) / 2;
            let dist = Dyadic::sqrt_ratio_upper(&d2, &Dyadic::one(), bits);
            dist.add(rho) <= *r
        }
    }
}

/// A sub-box of box `i` of width and height at most `eps` that still holds the root.
pub fn refine_root(rs: &RootSystem, i: usize, eps: &Dyadic) -> Result<ComplexBox> {
    rs.check_index(i)?;
    if !eps.is_zero() && eps.signum() < 0 {
        return Err(Error::Internal("refinement width must be positive".into()));
    }
    let b = &rs.boxes[i];
    if b.width() <= *eps && b.height() <= *eps {
        return Ok(b.clone());
    }
    let df = rs.poly.derivative();
    newton_enclose(rs, &df, i, &rs.centers[i], b, eps, 64).map(|(_, b)| b)
}

/// Caches progressively refined boxes for repeated queries on one system.
pub struct Refiner<'a> {
    rs: &'a RootSystem,
    df: IntPolynomial,
    z: Vec<DComplex>,
    boxes: Vec<ComplexBox>,
    reached: Vec<i64>,
}

impl<'a> Refiner<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        Refiner {
            rs,
            df: rs.poly.derivative(),
            z: rs.centers.clone(),
            boxes: rs.boxes.clone(),
            reached: vec![32; rs.degree()],
        }
    }

    pub fn system(&self) -> &'a RootSystem {
        self.rs
    }

    /// Box for root `i` with width and height at most `2^-bits`.
    pub fn enclose(&mut self, i: usize, bits: i64) -> Result<ComplexBox> {
        let eps = Dyadic::pow2(-bits);
        let cur = &self.boxes[i];
        if cur.width() <= eps && cur.height() <= eps {
            return Ok(cur.clone());
        }
        let hint = 2 * self.reached[i];
        let (z, b) = newton_enclose(self.rs, &self.df, i, &self.z[i], cur, &eps, hint)?;
        let j = self.rs.conj[i];
        self.reached[i] = bits;
        if j != i {
            self.z[j] = z.conj();
            self.boxes[j] = b.conj();
            self.reached[j] = bits;
        }
        self.z[i] = z;
        self.boxes[i] = b.clone();
        Ok(b)
    }

    /// Enclosure of `|lambda_i|^2`.
    pub fn sq_modulus(&mut self, i: usize, bits: i64) -> Result<Interval> {
        Ok(self.enclose(i, bits)?.norm_sq())
    }
}
