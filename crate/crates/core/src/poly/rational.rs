use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntPolynomial;

/// Polynomial with rational coefficients stored as `numerator / denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    numerator: IntPolynomial,
    denominator: BigInt,
}

impl RationalPolynomial {
    /// Reduces so that `gcd(content(numerator), denominator) = 1` and the
    /// denominator is positive.
    pub fn new(numerator: IntPolynomial, denominator: BigInt) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        let mut num = numerator;
        let mut den = denominator;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.content().gcd(&den);
        if !g.is_zero() && !g.is_one() {
            num = IntPolynomial::new(num.coeffs().iter().map(|c| c / &g).collect());
            den /= &g;
        }
        if num.is_zero() {
            den = BigInt::one();
        }
        RationalPolynomial {
            numerator: num,
            denominator: den,
        }
    }

    pub fn from_int(p: IntPolynomial) -> Self {
        Self::new(p, BigInt::one())
    }

    /// Coefficients lowest degree first.
    pub fn from_rationals(coeffs: &[BigRational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::new(IntPolynomial::new(num), den)
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        BigRational::new(self.numerator.coeff(k), self.denominator.clone())
    }

    pub fn degree(&self) -> usize {
        self.numerator.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.denominator.is_one()
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        let lc = self.numerator.leading();
        Self::new(self.numerator.clone(), lc)
    }

    /// The primitive integer polynomial with the same roots.
    pub fn to_primitive(&self) -> IntPolynomial {
        self.numerator.normalized()
    }

    pub fn into_integral(self) -> Option<IntPolynomial> {
        if self.is_integral() {
            Some(self.numerator)
        } else {
            None
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.numerator.eval_rational(x) / BigRational::from_integer(self.denominator.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn reduces_common_content() {
        let p = RationalPolynomial::new(IntPolynomial::from_i64s(&[2, 4]), BigInt::from(-6));
        assert_eq!(p.numerator(), &IntPolynomial::from_i64s(&[-1, -2]));
        assert_eq!(p.denominator(), &BigInt::from(3));
    }

    #[test]
    fn from_rationals_and_monic() {
        let p = RationalPolynomial::from_rationals(&[q(1, 2), q(-1, 3), q(2, 1)]);
        assert_eq!(p.coeff(0), q(1, 2));
        assert_eq!(p.coeff(1), q(-1, 3));
        let m = p.monic();
        assert_eq!(m.coeff(2), q(1, 1));
        assert_eq!(m.coeff(0), q(1, 4));
        assert!(!m.is_integral());
        assert_eq!(p.to_primitive(), IntPolynomial::from_i64s(&[3, -2, 12]));
    }
}
