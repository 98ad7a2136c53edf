//! Dyadic rationals `m * 2^e` and closed intervals with dyadic endpoints.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact dyadic rational. The mantissa is odd unless the value is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        if mant.is_zero() {
            return Dyadic { mant, exp: 0 };
        }
        let tz = mant.trailing_zeros().unwrap_or(0);
        Dyadic {
            mant: mant >> tz,
            exp: exp + tz as i64,
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            mant: BigInt::one(),
            exp: 0,
        }
    }

    pub fn from_int(n: BigInt) -> Self {
        Self::new(n, 0)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::new(BigInt::from(n), 0)
    }

    /// `2^k`.
    pub fn pow2(k: i64) -> Self {
        Dyadic {
            mant: BigInt::one(),
            exp: k,
        }
    }

    /// Exact conversion of a finite double.
    pub fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        if x == 0.0 {
            return Some(Self::zero());
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Some(Self::new(BigInt::from(m) * sign, e))
    }

    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let b = self.mant.bits() as i64;
        let (m, e) = if b > 60 {
            (&self.mant >> (b - 60) as u64, self.exp + b - 60)
        } else {
            (self.mant.clone(), self.exp)
        };
        let mut mf = m.to_f64().unwrap_or(0.0);
        let mut e = e;
        if e > 2100 {
            return mf.signum() * f64::INFINITY;
        }
        if e < -2200 {
            return 0.0;
        }
        while e < -900 {
            mf *= 2f64.powi(-900);
            e += 900;
        }
        while e > 900 {
            mf *= 2f64.powi(900);
            e -= 900;
        }
        mf * 2f64.powi(e as i32)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        if self.mant.is_zero() {
            0
        } else if self.mant.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    /// `floor(log2 |x|)` for nonzero `x`.
    pub fn log2_floor(&self) -> i64 {
        self.mant.bits() as i64 - 1 + self.exp
    }

    pub fn shl(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(o.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &o.mant << (o.exp - e) as u64;
        Self::new(a + b, e)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Dyadic {
            mant: &self.mant * &o.mant,
            exp: self.exp + o.exp,
        }
    }

    pub fn neg(&self) -> Self {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as u64)
        } else {
            BigRational::new(self.mant.clone(), pow2((-self.exp) as u64))
        }
    }

    /// Largest multiple of `2^-k` not above `x`.
    pub fn floor_to(&self, k: i64) -> Self {
        if self.exp >= -k {
            return self.clone();
        }
        let shift = pow2((-k - self.exp) as u64);
        Self::new(self.mant.div_floor(&shift), -k)
    }

    /// Smallest multiple of `2^-k` not below `x`.
    pub fn ceil_to(&self, k: i64) -> Self {
        if self.exp >= -k {
            return self.clone();
        }
        let shift = pow2((-k - self.exp) as u64);
        Self::new(self.mant.div_ceil(&shift), -k)
    }

    /// Rounds toward the nearest multiple of `2^-k` (ties down).
    pub fn round_to(&self, k: i64) -> Self {
        if self.exp >= -k {
            return self.clone();
        }
        let half = Dyadic::pow2(-k - 1);
        self.add(&half).floor_to(k)
    }

    pub fn floor_rational(q: &BigRational, k: i64) -> Self {
        let (n, d) = scaled(q, k);
        Self::new(n.div_floor(&d), -k)
    }

    pub fn ceil_rational(q: &BigRational, k: i64) -> Self {
        let (n, d) = scaled(q, k);
        Self::new(n.div_ceil(&d), -k)
    }

    /// Upper bound on `sqrt(q)` for rational `q >= 0`, accurate to `2^-k`.
    pub fn sqrt_upper(q: &BigRational, k: i64) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let s = Self::floor_rational(q, 2 * k);
        // s * 4^k is an integer
        let n = s.scaled_integer(2 * k);
        let r = n.sqrt();
        let r = if &r * &r == n && Self::new(n.clone(), -2 * k).to_rational() == *q {
            r
        } else {
            r + 1
        };
        Self::new(r, -k)
    }

    /// Lower bound on `sqrt(q)` for rational `q >= 0`, accurate to `2^-k`.
    pub fn sqrt_lower(q: &BigRational, k: i64) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let s = Self::floor_rational(q, 2 * k);
        Self::new(s.scaled_integer(2 * k).sqrt(), -k)
    }

    /// `x * 2^k` as an integer; the caller guarantees exactness.
    fn scaled_integer(&self, k: i64) -> BigInt {
        let e = self.exp + k;
        debug_assert!(e >= 0 || self.mant.is_zero());
        if self.mant.is_zero() {
            BigInt::zero()
        } else {
            &self.mant << e as u64
        }
    }

    /// `floor(a / b * 2^k)` as an integer, with a flag for exact division.
    fn scaled_quotient(a: &Self, b: &Self, k: i64) -> (BigInt, bool) {
        assert!(!b.is_zero(), "division by zero");
        let s = a.exp - b.exp + k;
        let (n, d) = if s >= 0 {
            (&a.mant << s as u64, b.mant.clone())
        } else {
            (a.mant.clone(), &b.mant << (-s) as u64)
        };
        let (q, r) = n.div_mod_floor(&d);
        (q, r.is_zero())
    }

    /// Largest multiple of `2^-k` not above `a / b`.
    pub fn div_floor(a: &Self, b: &Self, k: i64) -> Self {
        Self::new(Self::scaled_quotient(a, b, k).0, -k)
    }

    /// Smallest multiple of `2^-k` not below `a / b`.
    pub fn div_ceil(a: &Self, b: &Self, k: i64) -> Self {
        let (q, exact) = Self::scaled_quotient(a, b, k);
        Self::new(if exact { q } else { q + 1 }, -k)
    }

    /// `a / b` rounded to a nearest multiple of `2^-k`.
    pub fn div_round(a: &Self, b: &Self, k: i64) -> Self {
        let half = b.abs().shl(-k - 1);
        Self::div_floor(&a.add(&half), b, k)
    }

    /// Upper bound on `sqrt(a / b)` for `a >= 0`, `b > 0`, accurate to `2^-k`.
    pub fn sqrt_ratio_upper(a: &Self, b: &Self, k: i64) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        let (n, exact) = Self::scaled_quotient(a, b, 2 * k);
        let r = n.sqrt();
        let r = if exact && &r * &r == n { r } else { r + 1 };
        Self::new(r, -k)
    }

    /// Lower bound on `sqrt(a / b)` for `a >= 0`, `b > 0`, accurate to `2^-k`.
    pub fn sqrt_ratio_lower(a: &Self, b: &Self, k: i64) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        Self::new(Self::scaled_quotient(a, b, 2 * k).0.sqrt(), -k)
    }

    pub fn min(a: &Self, b: &Self) -> Self {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn max(a: &Self, b: &Self) -> Self {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }
}

fn scaled(q: &BigRational, k: i64) -> (BigInt, BigInt) {
    if k >= 0 {
        (q.numer() << k as u64, q.denom().clone())
    } else {
        (q.numer().clone(), q.denom() << (-k) as u64)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, o: &Self) -> Ordering {
        let ds = self.sub(o).signum();
        ds.cmp(&0)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mant, self.exp)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

/// A closed interval `[lo, hi]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Interval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Dyadic) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero() -> Self {
        Self::point(Dyadic::zero())
    }

    /// `[c - r, c + r]`.
    pub fn ball(c: &Dyadic, r: &Dyadic) -> Self {
        Interval {
            lo: c.sub(r),
            hi: c.add(r),
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lo.add(&self.hi).shl(-1)
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    pub fn overlaps(&self, o: &Self) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    pub fn is_subset_of(&self, o: &Self) -> bool {
        o.lo <= self.lo && self.hi <= o.hi
    }

    pub fn intersect(&self, o: &Self) -> Option<Self> {
        let lo = Dyadic::max(&self.lo, &o.lo);
        let hi = Dyadic::min(&self.hi, &o.hi);
        (lo <= hi).then(|| Interval { lo, hi })
    }

    /// `max |x|` over the interval.
    pub fn mag(&self) -> Dyadic {
        Dyadic::max(&self.lo.abs(), &self.hi.abs())
    }

    /// `min |x|` over the interval.
    pub fn mig(&self) -> Dyadic {
        if self.contains_zero() {
            Dyadic::zero()
        } else {
            Dyadic::min(&self.lo.abs(), &self.hi.abs())
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Interval {
            lo: self.lo.add(&o.lo),
            hi: self.hi.add(&o.hi),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Interval {
            lo: self.lo.sub(&o.hi),
            hi: self.hi.sub(&o.lo),
        }
    }

    pub fn neg(&self) -> Self {
        Interval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    pub fn scale(&self, c: &Dyadic) -> Self {
        let a = self.lo.mul(c);
        let b = self.hi.mul(c);
        if c.signum() >= 0 {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let ps = [
            self.lo.mul(&o.lo),
            self.lo.mul(&o.hi),
            self.hi.mul(&o.lo),
            self.hi.mul(&o.hi),
        ];
        let lo = ps.iter().min().expect("nonempty").clone();
        let hi = ps.iter().max().expect("nonempty").clone();
        Interval { lo, hi }
    }

    pub fn sqr(&self) -> Self {
        let a = self.lo.mul(&self.lo);
        let b = self.hi.mul(&self.hi);
        if self.contains_zero() {
            Interval {
                lo: Dyadic::zero(),
                hi: Dyadic::max(&a, &b),
            }
        } else if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    /// Outward-rounded `1/x` at absolute precision `2^-k`; `None` if `0` is inside.
    pub fn recip(&self, k: i64) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        let one = Dyadic::one();
        let lo = Dyadic::div_floor(&one, &self.hi, k);
        let hi = Dyadic::div_ceil(&one, &self.lo, k);
        Some(Interval { lo, hi })
    }

    /// Rounds both endpoints outward to multiples of `2^-k`.
    pub fn round_out(&self, k: i64) -> Self {
        Interval {
            lo: self.lo.floor_to(k),
            hi: self.hi.ceil_to(k),
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.lo.to_f64(), self.hi.to_f64())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
