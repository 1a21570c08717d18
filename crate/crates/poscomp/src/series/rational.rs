//! Rational generating functions kept in a canonical normalized form so
//! equality of closed forms is plain structural equality.

use std::fmt;
use std::ops::{Add, Mul};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use super::SeriesError;

/// A ratio of integer polynomials with a power-series expansion.
///
/// Invariants after construction: the denominator has a nonzero constant
/// term; numerator and denominator share no polynomial factor; the gcd
/// of all coefficients across both is 1; and the denominator's constant
/// term is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalGf {
    num: IntPoly,
    den: IntPoly,
}

impl RationalGf {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, SeriesError> {
        if den.constant_term().is_zero() {
            return Err(SeriesError::ZeroConstantDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return RationalGf {
                num,
                den: IntPoly::one(),
            };
        }
        let g = IntPoly::gcd(&num, &den);
        let mut num = num.exact_div(&g).expect("gcd divides the numerator");
        let mut den = den.exact_div(&g).expect("gcd divides the denominator");
        let content = num.content().gcd(&den.content());
        if !content.is_one() {
            num = num.div_content(&content);
            den = den.div_content(&content);
        }
        if den.constant_term().is_negative() {
            num = -&num;
            den = -&den;
        }
        RationalGf { num, den }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }
}

impl Add for &RationalGf {
    type Output = RationalGf;

    fn add(self, rhs: &RationalGf) -> RationalGf {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        // constant terms multiply, so the sum's denominator stays legal
        RationalGf::normalized(num, den)
    }
}

impl Mul for &RationalGf {
    type Output = RationalGf;

    fn mul(self, rhs: &RationalGf) -> RationalGf {
        RationalGf::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn over(num: &[i64], den: &[i64]) -> RationalGf {
        RationalGf::new(IntPoly::from_i64(num), IntPoly::from_i64(den)).unwrap()
    }

    #[test]
    fn doubling_a_simple_fraction() {
        // x/(1-x) + x/(1-x) = 2x/(1-x)
        let geo = over(&[0, 1], &[1, -1]);
        assert_eq!(&geo + &geo, over(&[0, 2], &[1, -1]));
    }

    #[test]
    fn zero_constant_denominator_rejected() {
        let r = RationalGf::new(IntPoly::one(), IntPoly::x());
        assert_eq!(r, Err(SeriesError::ZeroConstantDenominator));
    }

    #[test]
    fn normalization_is_canonical() {
        // 2x(1-x) / 2(1-x)^2 reduces to x/(1-x)
        let a = over(&[0, 2, -2], &[2, -4, 2]);
        assert_eq!(a, over(&[0, 1], &[1, -1]));
        // negative constant term in the denominator flips both signs
        let b = over(&[0, -1], &[-1, 1]);
        assert_eq!(b, over(&[0, 1], &[1, -1]));
    }

    #[test]
    fn zero_numerator_collapses() {
        let z = over(&[], &[5, 3]);
        assert_eq!(z.num(), &IntPoly::zero());
        assert_eq!(z.den(), &IntPoly::one());
    }

    #[test]
    fn product_of_fractions() {
        let geo = over(&[0, 1], &[1, -1]);
        let sq = &geo * &geo;
        assert_eq!(sq, over(&[0, 0, 1], &[1, -2, 1]));
    }
}
