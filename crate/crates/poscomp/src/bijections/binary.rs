//! Run-length correspondence between binary strings and composition
//! skeletons, where the runs of 1's carry the color multiplicities.

use num_bigint::BigUint;

use super::BijectionError;
use crate::comp::{ColoredComposition, ColoringScheme};
use crate::patterns::{run_product, BinaryString};

fn runs_to_sizes(digits: impl Iterator<Item = u8>) -> Vec<u64> {
    let mut sizes = Vec::new();
    let mut current: Option<(u8, u64)> = None;
    for d in digits {
        match current {
            Some((digit, len)) if digit == d => current = Some((digit, len + 1)),
            Some((_, len)) => {
                sizes.push(len);
                current = Some((d, 1));
            }
            None => current = Some((d, 1)),
        }
    }
    if let Some((_, len)) = current {
        sizes.push(len);
    }
    sizes
}

/// Map a binary string of length `k` to an uncolored skeleton of
/// `k + 1` and its fiber size.
///
/// A zero is prepended, so maximal runs of equal digits land on
/// alternating positions with the 0-runs odd-positioned and the 1-runs
/// even-positioned; each run becomes a part of the run's length. The
/// returned multiplicity — the product of the lengths of the runs of
/// 1's (empty product 1) — counts the EVEN colored compositions sharing
/// that skeleton.
pub fn binary_to_skeleton(s: &BinaryString) -> (ColoredComposition, BigUint) {
    let sizes = runs_to_sizes(std::iter::once(0).chain(s.digits().iter().copied()));
    let skeleton =
        ColoredComposition::from_sizes(&sizes).expect("a prepended zero guarantees a part");
    (skeleton, run_product(s))
}

/// Forget the colors of an EVEN composition of `k + 1` and emit the
/// binary string of length `k` whose runs spell the skeleton (the
/// leading zero is dropped). A bare skeleton (no colors at all) is
/// accepted too, since only the sizes matter.
pub fn comp_to_binary(comp: &ColoredComposition) -> Result<BinaryString, BijectionError> {
    let even = ColoringScheme::even();
    let bare = comp.parts().iter().all(|p| p.color().is_none());
    if !bare && !even.validate(comp) {
        return Err(BijectionError::InvalidUnderScheme { scheme: even });
    }
    let mut digits = Vec::with_capacity(comp.total() as usize);
    for (idx, part) in comp.parts().iter().enumerate() {
        let digit = (idx % 2) as u8;
        digits.extend(std::iter::repeat(digit).take(part.size() as usize));
    }
    digits.remove(0); // the prepended zero of the inverse direction
    Ok(BinaryString::new(digits).expect("digits are 0 or 1"))
}

/// The ODD-composition variant, for strings starting with 1.
///
/// With `prepend_one = false` the runs of `s` itself become the
/// skeleton (1-runs odd-positioned), and the run product counts the ODD
/// colorings of that skeleton; summed over all strings of length `k`
/// starting with 1 this recovers the ODD sequence. `prepend_one = true`
/// instead prepends a 1 before reading runs, which lengthens the first
/// run; the sum then overshoots the ODD sequence, so this reading exists
/// for comparison only.
pub fn odd_binary_variant(
    s: &BinaryString,
    prepend_one: bool,
) -> Result<(ColoredComposition, BigUint), BijectionError> {
    if s.digits().first() != Some(&1) {
        return Err(BijectionError::MustStartWithOne);
    }
    let (sizes, multiplicity) = if prepend_one {
        let digits: Vec<u8> = std::iter::once(1).chain(s.digits().iter().copied()).collect();
        let extended = BinaryString::new(digits).expect("digits are 0 or 1");
        (runs_to_sizes(extended.digits().iter().copied()), run_product(&extended))
    } else {
        (runs_to_sizes(s.digits().iter().copied()), run_product(s))
    };
    let skeleton = ColoredComposition::from_sizes(&sizes).expect("s is non-empty");
    Ok((skeleton, multiplicity))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    use crate::comp::{count_dp, enumerate};

    fn bin(s: &str) -> BinaryString {
        s.parse().unwrap()
    }

    fn all_binary(len: usize) -> Vec<BinaryString> {
        (0..1u32 << len)
            .map(|bits| {
                BinaryString::new((0..len).map(|i| ((bits >> (len - 1 - i)) & 1) as u8).collect())
                    .unwrap()
            })
            .collect()
    }

    #[test]
    fn figure_example() {
        let (skeleton, mult) = binary_to_skeleton(&bin("1101111110000"));
        assert_eq!(skeleton.to_string(), "1+2+1+6+4");
        assert_eq!(mult, BigUint::from(12u32));
    }

    #[test]
    fn all_zero_string() {
        let (skeleton, mult) = binary_to_skeleton(&bin("000"));
        assert_eq!(skeleton.to_string(), "4");
        assert_eq!(mult, BigUint::one());
    }

    #[test]
    fn forgetting_colors() {
        let c: ColoredComposition = "1+2_2+1+6_4+4".parse().unwrap();
        assert_eq!(comp_to_binary(&c).unwrap().to_string(), "1101111110000");
    }

    #[test]
    fn multiplicities_of_length_three_sum_to_e4() {
        let total: BigUint = all_binary(3)
            .iter()
            .map(|s| binary_to_skeleton(s).1)
            .sum();
        assert_eq!(total, BigUint::from(12u32));
        assert_eq!(total, count_dp(&ColoringScheme::even(), 4));
    }

    #[test]
    fn odd_variant_without_prepend_matches_the_odd_sequence() {
        for k in 1..=8usize {
            let total: BigUint = all_binary(k)
                .iter()
                .filter(|s| s.digits()[0] == 1)
                .map(|s| odd_binary_variant(s, false).unwrap().1)
                .sum();
            assert_eq!(total, count_dp(&ColoringScheme::odd(), k as u64), "k={k}");
        }
    }

    #[test]
    fn odd_variant_with_prepend_overshoots() {
        // "1" read with a prepended 1 gives part 2 with multiplicity 2,
        // but there is exactly one ODD composition of 1
        let (skeleton, mult) = odd_binary_variant(&bin("1"), true).unwrap();
        assert_eq!(skeleton.to_string(), "2");
        assert_eq!(mult, BigUint::from(2u32));
        let (skeleton, mult) = odd_binary_variant(&bin("1"), false).unwrap();
        assert_eq!(skeleton.to_string(), "1");
        assert_eq!(mult, BigUint::one());
    }

    #[test]
    fn odd_variant_rejects_leading_zero() {
        assert_eq!(
            odd_binary_variant(&bin("01"), false).unwrap_err(),
            BijectionError::MustStartWithOne
        );
    }

    #[test]
    fn fibers_have_the_stated_size() {
        for n in 2..=8u64 {
            for s in all_binary((n - 1) as usize) {
                let (skeleton, mult) = binary_to_skeleton(&s);
                let fiber = enumerate(&ColoringScheme::even(), n)
                    .unwrap()
                    .filter(|c| c.skeleton() == skeleton)
                    .count();
                assert_eq!(BigUint::from(fiber), mult, "string {s}");
            }
        }
    }

    #[test]
    fn skeleton_roundtrip() {
        for len in 1..=8usize {
            for s in all_binary(len) {
                let (skeleton, _) = binary_to_skeleton(&s);
                assert_eq!(comp_to_binary(&skeleton).unwrap(), s);
            }
        }
    }

    #[test]
    fn rejects_invalid_even_composition() {
        let c: ColoredComposition = "1_1".parse().unwrap();
        assert!(comp_to_binary(&c).is_err());
        let c: ColoredComposition = "1+2_2+1_1".parse().unwrap();
        assert!(comp_to_binary(&c).is_err());
    }
}
