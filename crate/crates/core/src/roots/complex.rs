//! Exact dyadic complex points and complex boxes (rectangular intervals).

use std::fmt;

use super::dyadic::{Dyadic, Interval};
use crate::poly::IntPolynomial;

/// An exact complex number with dyadic parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DComplex {
    pub re: Dyadic,
    pub im: Dyadic,
}

impl DComplex {
    pub fn new(re: Dyadic, im: Dyadic) -> Self {
        DComplex { re, im }
    }

    pub fn real(re: Dyadic) -> Self {
        DComplex {
            re,
            im: Dyadic::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::real(Dyadic::zero())
    }

    pub fn from_f64(re: f64, im: f64) -> Option<Self> {
        Some(DComplex {
            re: Dyadic::from_f64(re)?,
            im: Dyadic::from_f64(im)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        DComplex {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        DComplex {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        DComplex {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_real() && o.is_real() {
            return Self::real(self.re.mul(&o.re));
        }
        DComplex {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn norm_sq(&self) -> Dyadic {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn round_to(&self, k: i64) -> Self {
        DComplex {
            re: self.re.round_to(k),
            im: self.im.round_to(k),
        }
    }

    /// `self / o` rounded to multiples of `2^-k`; `None` when `o = 0`.
    pub fn div_round(&self, o: &Self, k: i64) -> Option<Self> {
        let den = o.norm_sq();
        if den.is_zero() {
            return None;
        }
        let num = self.mul(&o.conj());
        Some(DComplex {
            re: Dyadic::div_round(&num.re, &den, k),
            im: Dyadic::div_round(&num.im, &den, k),
        })
    }

    /// Exact value of an integer polynomial at this point (Horner).
    pub fn eval(f: &IntPolynomial, z: &Self) -> Self {
        let mut acc = DComplex::zero();
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(z).add(&DComplex::real(Dyadic::from_int(c.clone())));
        }
        acc
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

/// A closed axis-aligned box `[re_lo, re_hi] x [im_lo, im_hi]` in the complex plane.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ComplexBox {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexBox {
    pub fn new(re: Interval, im: Interval) -> Self {
        ComplexBox { re, im }
    }

    pub fn point(z: &DComplex) -> Self {
        ComplexBox {
            re: Interval::point(z.re.clone()),
            im: Interval::point(z.im.clone()),
        }
    }

    /// The square of half-width `r` centred at `z`.
    pub fn square(z: &DComplex, r: &Dyadic) -> Self {
        ComplexBox {
            re: Interval::ball(&z.re, r),
            im: Interval::ball(&z.im, r),
        }
    }

    pub fn re_lo(&self) -> &Dyadic {
        &self.re.lo
    }

    pub fn re_hi(&self) -> &Dyadic {
        &self.re.hi
    }

    pub fn im_lo(&self) -> &Dyadic {
        &self.im.lo
    }

    pub fn im_hi(&self) -> &Dyadic {
        &self.im.hi
    }

    pub fn width(&self) -> Dyadic {
        self.re.width()
    }

    pub fn height(&self) -> Dyadic {
        self.im.width()
    }

    pub fn center(&self) -> DComplex {
        DComplex {
            re: self.re.midpoint(),
            im: self.im.midpoint(),
        }
    }

    pub fn conj(&self) -> Self {
        ComplexBox {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn overlaps(&self, o: &Self) -> bool {
        self.re.overlaps(&o.re) && self.im.overlaps(&o.im)
    }

    pub fn intersect(&self, o: &Self) -> Option<Self> {
        Some(ComplexBox {
            re: self.re.intersect(&o.re)?,
            im: self.im.intersect(&o.im)?,
        })
    }

    pub fn is_subset_of(&self, o: &Self) -> bool {
        self.re.is_subset_of(&o.re) && self.im.is_subset_of(&o.im)
    }

    pub fn contains(&self, z: &DComplex) -> bool {
        self.re.contains(&z.re) && self.im.contains(&z.im)
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn meets_real_axis(&self) -> bool {
        self.im.contains_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexBox {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexBox {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ComplexBox {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, c: &Dyadic) -> Self {
        ComplexBox {
            re: self.re.scale(c),
            im: self.im.scale(c),
        }
    }

    /// Enclosure of `|z|^2` over the box.
    pub fn norm_sq(&self) -> Interval {
        self.re.sqr().add(&self.im.sqr())
    }

    /// Outward-rounded quotient at absolute precision `2^-k`; `None` if `o` meets 0.
    pub fn div(&self, o: &Self, k: i64) -> Option<Self> {
        let inv = o.norm_sq().recip(k)?;
        let num = self.mul(&o.conj());
        Some(
            ComplexBox {
                re: num.re.mul(&inv),
                im: num.im.mul(&inv),
            }
            .round_out(k),
        )
    }

    pub fn round_out(&self, k: i64) -> Self {
        ComplexBox {
            re: self.re.round_out(k),
            im: self.im.round_out(k),
        }
    }

    /// Interval Horner evaluation of an integer polynomial.
    pub fn eval(f: &IntPolynomial, z: &Self) -> Self {
        let zero = ComplexBox::point(&DComplex::zero());
        let mut acc = zero;
        for c in f.coeffs().iter().rev() {
            let c = ComplexBox::point(&DComplex::real(Dyadic::from_int(c.clone())));
            acc = acc.mul(z).add(&c);
        }
        acc
    }
}

impl fmt::Display for ComplexBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + i{}", self.re, self.im)
    }
}
