//! Exact counting by dynamic programming over (remaining sum, position
//! class). Serves as an independent cross-check for both the enumerators
//! and the generating-function expansions.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::ColoringScheme;

/// Number of valid compositions of `total` under `scheme`.
///
/// A part of size `s` at a colored position contributes a factor `s`
/// (its color choices); an uncolored position contributes 1. Under
/// `RestrictColors(lo, d)` a part contributes `|{1..=s} \ {lo..=lo+d}|`
/// and under `ChooseTwo` it contributes `s (s - 1) / 2`.
pub fn count_dp(scheme: &ColoringScheme, total: u64) -> BigUint {
    if total == 0 {
        return BigUint::zero();
    }
    let classes = scheme.class_count() as usize;
    let n = total as usize;
    // table[rem][cls]: weighted ways to finish a composition with `rem`
    // left to write, the next part landing in position class `cls`
    let mut table = vec![vec![BigUint::zero(); classes]; n + 1];
    for cls in 0..classes {
        table[0][cls] = BigUint::one();
    }
    for rem in 1..=n {
        for cls in 0..classes {
            let mut acc = BigUint::zero();
            for size in 1..=rem {
                let weight = scheme.color_count_at_class(size as u64, cls as u64);
                if weight != 0 {
                    acc += &table[rem - size][(cls + 1) % classes] * weight;
                }
            }
            table[rem][cls] = acc;
        }
    }
    table[n][0].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp::{enumerate, enumerate_choose_two};

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn even_and_odd_counts() {
        assert_eq!(count_dp(&ColoringScheme::even(), 5), n(28));
        assert_eq!(count_dp(&ColoringScheme::odd(), 5), n(37));
    }

    #[test]
    fn choose_two_counts() {
        assert_eq!(count_dp(&ColoringScheme::choose_two(), 3), n(3));
        assert_eq!(count_dp(&ColoringScheme::choose_two(), 4), n(7));
    }

    #[test]
    fn zero_total_has_no_compositions() {
        assert_eq!(count_dp(&ColoringScheme::even(), 0), BigUint::zero());
    }

    #[test]
    fn matches_enumeration_lengths() {
        for (m, k) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 3), (4, 2)] {
            let scheme = ColoringScheme::positional(m, k).unwrap();
            for total in 1..=9 {
                let len = enumerate(&scheme, total).unwrap().count();
                assert_eq!(count_dp(&scheme, total), n(len as u64), "({m},{k}) n={total}");
            }
        }
        let restricted = ColoringScheme::restrict_colors(2, 0).unwrap();
        for total in 1..=9 {
            let len = enumerate(&restricted, total).unwrap().count();
            assert_eq!(count_dp(&restricted, total), n(len as u64));
        }
        for total in 2..=9 {
            let len = enumerate_choose_two(total).count();
            assert_eq!(count_dp(&ColoringScheme::choose_two(), total), n(len as u64));
        }
    }

    #[test]
    fn class_normalization_leaves_counts_unchanged() {
        for m in 1..=5u64 {
            for k in 1..=m {
                let a = ColoringScheme::positional(m, k).unwrap();
                let b = ColoringScheme::positional(m, k + m).unwrap();
                for total in 1..=8 {
                    assert_eq!(count_dp(&a, total), count_dp(&b, total));
                }
            }
        }
    }
}
