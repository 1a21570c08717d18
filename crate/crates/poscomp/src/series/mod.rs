//! Generating functions for positional colorings and exact coefficient
//! extraction.
//!
//! Coefficients come out of the linear recurrence the denominator
//! induces: with numerator terms `num_n` and denominator `d_0 + d_1 x +
//! ...`, the expansion satisfies `d_0 c_n = num_n - Σ_{i>=1} d_i
//! c_{n-i}`. All arithmetic is exact; a leading denominator term that
//! fails to divide is reported, never rounded.

mod poly;
mod rational;

pub use poly::IntPoly;
pub use rational::RationalGf;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::comp::{enumerate, ColoringScheme, CompError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("denominator must have a nonzero constant term")]
    ZeroConstantDenominator,
    #[error("coefficient {index} is not an integer: the denominator's constant term does not divide exactly")]
    NonIntegralCoefficient { index: usize },
    #[error(transparent)]
    Scheme(#[from] CompError),
}

/// Exact coefficients `c_0..=c_N` of a power series; `c_0` is kept apart
/// from the working terms `c_1..`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesExpansion {
    constant: BigInt,
    terms: Vec<BigInt>,
}

impl SeriesExpansion {
    pub fn constant(&self) -> &BigInt {
        &self.constant
    }

    /// Coefficients `c_1..=c_N`.
    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    /// Coefficient of `x^n`, with `n = 0` mapped to the constant.
    pub fn coeff(&self, n: usize) -> Option<&BigInt> {
        if n == 0 {
            Some(&self.constant)
        } else {
            self.terms.get(n - 1)
        }
    }

    /// Largest index carried, i.e. the `N` of `c_0..=c_N`.
    pub fn upper_index(&self) -> usize {
        self.terms.len()
    }
}

/// Expand `gf` to its first `n + 1` coefficients `c_0..=c_n`.
pub fn expand(gf: &RationalGf, n: usize) -> Result<SeriesExpansion, SeriesError> {
    let den = gf.den().coeffs();
    let d0 = &den[0];
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(n + 1);
    for idx in 0..=n {
        let mut acc = gf.num().coeff(idx);
        for (i, d) in den.iter().enumerate().skip(1) {
            if i > idx {
                break;
            }
            acc -= d * &coeffs[idx - i];
        }
        let (q, r) = acc.div_rem(d0);
        if !r.is_zero() {
            return Err(SeriesError::NonIntegralCoefficient { index: idx });
        }
        coeffs.push(q);
    }
    let constant = coeffs.remove(0);
    Ok(SeriesExpansion {
        constant,
        terms: coeffs,
    })
}

/// Generating function of the EVEN colored compositions:
/// `(x - x^2 + x^3) / (1 - 3x + 2x^2 - x^3)`.
pub fn gf_even() -> RationalGf {
    RationalGf::new(
        IntPoly::from_i64(&[0, 1, -1, 1]),
        IntPoly::from_i64(&[1, -3, 2, -1]),
    )
    .expect("fixed denominator has constant term 1")
}

/// Generating function of the ODD colored compositions:
/// `x / (1 - 3x + 2x^2 - x^3)`.
pub fn gf_odd() -> RationalGf {
    RationalGf::new(
        IntPoly::from_i64(&[0, 1]),
        IntPoly::from_i64(&[1, -3, 2, -1]),
    )
    .expect("fixed denominator has constant term 1")
}

/// Generating function of the `(m, k)` positional colorings, assembled
/// from three cases by the residue of the part count mod `m`, all over
/// the common denominator `(1-x)^{m+1} - x^m`:
///
/// * full groups of `m` parts contribute `x^m`,
/// * a short leftover of `j < k` uncolored parts contributes
///   `x^j (1-x)^{m-j+1}` for `j = 1..k`,
/// * a leftover of `l >= k` parts containing the colored position
///   contributes `x^l (1-x)^{m-l}` for `l = k..m`.
///
/// The class `k` is normalized into `1..=m` first.
pub fn gf_mk(modulus: u64, class: u64) -> Result<RationalGf, SeriesError> {
    let ColoringScheme::Positional { modulus: m, class: k } =
        ColoringScheme::positional(modulus, class)?
    else {
        unreachable!()
    };
    let one_minus_x = IntPoly::one_minus_x();
    let x_to = |e: u64| IntPoly::x().pow(e as u32);
    let den = &one_minus_x.pow(m as u32 + 1) - &x_to(m);
    let mut num = x_to(m);
    for j in 1..k {
        num = &num + &(&x_to(j) * &one_minus_x.pow((m - j + 1) as u32));
    }
    for l in k..m {
        num = &num + &(&x_to(l) * &one_minus_x.pow((m - l) as u32));
    }
    Ok(RationalGf::new(num, den)?)
}

/// The counting sequence `a(1)..=a(n)` of n-color compositions with the
/// colors `lo..=lo+d` banned.
///
/// Values up to index `lo + d + 1` (the deepest recurrence lag) are
/// seeded from the brute-force enumerator; beyond that
/// `a(n) = 3a(n-1) - a(n-2) - a(n-lo) + a(n-lo-d-1)` takes over.
pub fn recurrence_restricted(lo: u64, d: u64, n: usize) -> Result<SeriesExpansion, SeriesError> {
    let scheme = ColoringScheme::restrict_colors(lo, d)?;
    let seeds = (lo + d + 1) as usize;
    let mut terms: Vec<BigInt> = Vec::with_capacity(n);
    for i in 1..=n.min(seeds) {
        let count = enumerate(&scheme, i as u64)
            .expect("restricted schemes enumerate")
            .count();
        terms.push(BigInt::from(count));
    }
    let lo = lo as usize;
    let d = d as usize;
    for i in seeds..n {
        // terms[j] holds a(j+1)
        let value = 3 * &terms[i - 1] - &terms[i - 2] - &terms[i - lo] + &terms[i - lo - d - 1];
        terms.push(value);
    }
    Ok(SeriesExpansion {
        constant: BigInt::zero(),
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp::count_dp;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn geometric_series() {
        let geo = RationalGf::new(IntPoly::x(), IntPoly::one_minus_x()).unwrap();
        let s = expand(&geo, 4).unwrap();
        assert_eq!(s.constant(), &BigInt::zero());
        assert_eq!(s.terms(), ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn even_expansion() {
        let s = expand(&gf_even(), 6).unwrap();
        assert_eq!(s.constant(), &BigInt::zero());
        assert_eq!(s.terms(), ints(&[1, 2, 5, 12, 28, 65]));
    }

    #[test]
    fn odd_expansion() {
        let s = expand(&gf_odd(), 6).unwrap();
        assert_eq!(s.constant(), &BigInt::zero());
        assert_eq!(s.terms(), ints(&[1, 3, 7, 16, 37, 86]));
    }

    #[test]
    fn even_gf_is_the_sum_of_its_two_cases() {
        // odd part count: x(1-x)^2 / ((1-x)^3 - x^2)
        // even part count: x^2 / ((1-x)^3 - x^2)
        let den = &IntPoly::one_minus_x().pow(3) - &IntPoly::x().pow(2);
        let odd_half = RationalGf::new(
            &IntPoly::x() * &IntPoly::one_minus_x().pow(2),
            den.clone(),
        )
        .unwrap();
        let even_half = RationalGf::new(IntPoly::x().pow(2), den).unwrap();
        assert_eq!(&odd_half + &even_half, gf_even());
    }

    #[test]
    fn special_cases_match_the_general_form() {
        assert_eq!(gf_mk(2, 2).unwrap(), gf_even());
        assert_eq!(gf_mk(2, 1).unwrap(), gf_odd());
        assert_eq!(gf_mk(2, 0).unwrap(), gf_even()); // class 0 is class m
    }

    #[test]
    fn n_color_compositions_via_m_equals_one() {
        let s = expand(&gf_mk(1, 1).unwrap(), 4).unwrap();
        assert_eq!(s.terms(), ints(&[1, 3, 8, 21]));
    }

    #[test]
    fn general_form_matches_the_dp() {
        for m in 1..=4u64 {
            for k in 1..=m {
                let gf = gf_mk(m, k).unwrap();
                let s = expand(&gf, 10).unwrap();
                let scheme = ColoringScheme::positional(m, k).unwrap();
                for n in 1..=10usize {
                    let dp: BigInt = count_dp(&scheme, n as u64).into();
                    assert_eq!(s.coeff(n), Some(&dp), "m={m} k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn non_integral_expansion_is_reported() {
        let gf = RationalGf::new(IntPoly::one(), IntPoly::from_i64(&[2, 1])).unwrap();
        assert_eq!(
            expand(&gf, 3),
            Err(SeriesError::NonIntegralCoefficient { index: 0 })
        );
        // 2/(2+x): the constant term works out, the next one does not
        let gf = RationalGf::new(IntPoly::constant(2), IntPoly::from_i64(&[2, 1])).unwrap();
        assert_eq!(
            expand(&gf, 3),
            Err(SeriesError::NonIntegralCoefficient { index: 1 })
        );
    }

    #[test]
    fn restricted_recurrence_matches_even_sequence() {
        let s = recurrence_restricted(2, 0, 5).unwrap();
        assert_eq!(s.terms(), ints(&[1, 2, 5, 12, 28]));
    }

    #[test]
    fn restricted_recurrence_agrees_with_dp() {
        for (lo, d, n) in [(2, 0, 14), (2, 1, 12), (3, 0, 12), (3, 1, 12)] {
            let s = recurrence_restricted(lo, d, n).unwrap();
            let scheme = ColoringScheme::restrict_colors(lo, d).unwrap();
            for i in 1..=n {
                let dp: BigInt = count_dp(&scheme, i as u64).into();
                assert_eq!(s.coeff(i), Some(&dp), "lo={lo} d={d} n={i}");
            }
        }
    }
}
