//! Dense integer polynomials in one variable, ascending powers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An exact integer polynomial. The zero polynomial has no coefficients;
/// otherwise the trailing (highest-power) coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        IntPoly::from_coeffs(vec![BigInt::from(c)])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPoly::from_i64(&[0, 1])
    }

    /// `1 - x`.
    pub fn one_minus_x() -> Self {
        IntPoly::from_i64(&[1, -1])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Multiply by `x^j`.
    pub fn shift(&self, j: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); j];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divide every coefficient by `c`, which must divide exactly.
    pub(crate) fn div_content(&self, c: &BigInt) -> Self {
        debug_assert!(!c.is_zero());
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|x| {
                    let (q, r) = x.div_rem(c);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        }
    }

    fn primitive(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            self.clone()
        } else {
            self.div_content(&c)
        }
    }

    /// Exact division; `None` when `d` does not divide `self` in Z[x].
    pub(crate) fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.degree()?;
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len()];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let (factor, rem) = r.leading().div_rem(&d.leading());
            if !rem.is_zero() {
                return None;
            }
            q[dr - dd] = factor.clone();
            let step = d.shift(dr - dd) * IntPoly::from_coeffs(vec![factor]);
            r = &r - &step;
        }
        Some(IntPoly::from_coeffs(q))
    }

    /// Primitive polynomial gcd with positive leading coefficient
    /// (primitive-remainder Euclidean algorithm).
    pub(crate) fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        fn sign_normalize(p: IntPoly) -> IntPoly {
            if p.leading().is_negative() {
                -&p
            } else {
                p
            }
        }
        if a.is_zero() {
            return sign_normalize(b.primitive());
        }
        if b.is_zero() {
            return sign_normalize(a.primitive());
        }
        let mut a = a.primitive();
        let mut b = b.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = r.primitive();
        }
        sign_normalize(a)
    }
}

/// Remainder of `lc(b)^(deg a - deg b + 1) * a` divided by `b`; every
/// elimination step divides exactly.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let da = a.degree().expect("a nonzero");
    let db = b.degree().expect("b nonzero");
    debug_assert!(da >= db);
    let mut scale = BigInt::one();
    for _ in 0..(da - db + 1) {
        scale *= b.leading();
    }
    let mut r = a * &IntPoly::from_coeffs(vec![scale]);
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let (factor, rem) = r.leading().div_rem(&b.leading());
        debug_assert!(rem.is_zero());
        let step = b.shift(dr - db) * IntPoly::from_coeffs(vec![factor]);
        r = &r - &step;
    }
    r
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul<IntPoly> for IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl fmt::Display for IntPoly {
    /// Human form like `1 - 3x + 2x^2 - x^3`, ascending powers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_of_one_minus_x() {
        let p = IntPoly::one_minus_x().pow(3);
        assert_eq!(p, IntPoly::from_i64(&[1, -3, 3, -1]));
    }

    #[test]
    fn shared_denominator_shape() {
        // (1-x)^3 - x^2 = 1 - 3x + 2x^2 - x^3
        let p = &IntPoly::one_minus_x().pow(3) - &IntPoly::x().pow(2);
        assert_eq!(p, IntPoly::from_i64(&[1, -3, 2, -1]));
        assert_eq!(p.to_string(), "1 - 3x + 2x^2 - x^3");
    }

    #[test]
    fn display_edge_cases() {
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_i64(&[0, 1, -1, 1]).to_string(), "x - x^2 + x^3");
        assert_eq!(IntPoly::from_i64(&[-2, 0, 4]).to_string(), "-2 + 4x^2");
    }

    #[test]
    fn exact_division() {
        let a = IntPoly::from_i64(&[1, -2, 1]); // (1-x)^2
        let b = IntPoly::one_minus_x();
        assert_eq!(a.exact_div(&b), Some(b.clone()));
        assert_eq!(IntPoly::x().exact_div(&b), None);
    }

    #[test]
    fn gcd_of_shifted_products() {
        let a = &IntPoly::x() * &IntPoly::one_minus_x(); // x - x^2
        let b = IntPoly::one_minus_x().pow(2);
        // sign-normalized: positive leading coefficient, so x - 1
        assert_eq!(IntPoly::gcd(&a, &b), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(IntPoly::gcd(&IntPoly::zero(), &b), b);
    }

    #[test]
    fn content_and_primitive() {
        let p = IntPoly::from_i64(&[2, -4, 6]);
        assert_eq!(p.content(), BigInt::from(2));
        assert_eq!(p.primitive(), IntPoly::from_i64(&[1, -2, 3]));
    }
}
