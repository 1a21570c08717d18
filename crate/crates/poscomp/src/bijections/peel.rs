//! Peeling the first part: the bijection behind the step-down identity
//! relating `(m, k+1)` counts of `l + 1` to `(m, k+1)` and `(m, k)`
//! counts of `l`.

use super::BijectionError;
use crate::comp::{ColoredComposition, ColoringScheme, Part};

/// Outcome of peeling one unit off the front of a composition of
/// `l + 1` valid under `Positional(m, class)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Peeled {
    /// The first part was larger than 1 and lost one unit; the result is
    /// an `(m, class)` composition of `l`.
    Decremented(ColoredComposition),
    /// The first part was 1 and was removed; every remaining position
    /// moved down by one, so the result is an `(m, class - 1)`
    /// composition of `l`.
    Removed(ColoredComposition),
}

impl Peeled {
    pub fn composition(&self) -> &ColoredComposition {
        match self {
            Peeled::Decremented(c) | Peeled::Removed(c) => c,
        }
    }
}

fn positional_parts(scheme: &ColoringScheme) -> Result<(u64, u64), BijectionError> {
    match *scheme {
        ColoringScheme::Positional { modulus, class } if class != 1 => Ok((modulus, class)),
        ColoringScheme::Positional { .. } => Err(BijectionError::PeelColoredFirst),
        _ => Err(BijectionError::InvalidUnderScheme { scheme: *scheme }),
    }
}

/// Remove the first part if it is 1, otherwise decrement it. The scheme
/// class must not be 1 (the first position has to be uncolored) and the
/// total must be at least 2.
pub fn peel_first(
    comp: &ColoredComposition,
    scheme: &ColoringScheme,
) -> Result<Peeled, BijectionError> {
    let (modulus, class) = positional_parts(scheme)?;
    if !scheme.validate(comp) {
        return Err(BijectionError::InvalidUnderScheme { scheme: *scheme });
    }
    if comp.total() < 2 {
        return Err(BijectionError::PeelTooSmall);
    }
    let first = comp.parts()[0];
    if first.size() == 1 {
        let rest = ColoredComposition::new(comp.parts()[1..].to_vec())?;
        debug_assert!(ColoringScheme::positional(modulus, class - 1)
            .expect("modulus unchanged")
            .validate(&rest));
        Ok(Peeled::Removed(rest))
    } else {
        let mut parts = comp.parts().to_vec();
        parts[0] = Part::uncolored(first.size() - 1)?;
        Ok(Peeled::Decremented(ColoredComposition::new(parts)?))
    }
}

/// Inverse of [`peel_first`] for the original `(m, class)` scheme:
/// increment the first part of a `Decremented` value, or prepend an
/// uncolored 1 to a `Removed` value.
pub fn unpeel(
    peeled: &Peeled,
    scheme: &ColoringScheme,
) -> Result<ColoredComposition, BijectionError> {
    let (modulus, class) = positional_parts(scheme)?;
    match peeled {
        Peeled::Decremented(c) => {
            if !scheme.validate(c) {
                return Err(BijectionError::InvalidUnderScheme { scheme: *scheme });
            }
            let mut parts = c.parts().to_vec();
            parts[0] = Part::uncolored(parts[0].size() + 1)?;
            Ok(ColoredComposition::new(parts)?)
        }
        Peeled::Removed(c) => {
            let lower = ColoringScheme::positional(modulus, class - 1)?;
            if !lower.validate(c) {
                return Err(BijectionError::InvalidUnderScheme { scheme: lower });
            }
            let mut parts = vec![Part::uncolored(1)?];
            parts.extend_from_slice(c.parts());
            Ok(ColoredComposition::new(parts)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp::{count_dp, enumerate};

    fn comp(s: &str) -> ColoredComposition {
        s.parse().unwrap()
    }

    #[test]
    fn removal_shifts_the_scheme() {
        let even = ColoringScheme::even();
        let got = peel_first(&comp("1+2_2"), &even).unwrap();
        assert_eq!(got, Peeled::Removed(comp("2_2")));
        assert!(ColoringScheme::odd().validate(got.composition()));
        assert_eq!(unpeel(&got, &even).unwrap(), comp("1+2_2"));
    }

    #[test]
    fn decrement_keeps_the_scheme() {
        let even = ColoringScheme::even();
        let got = peel_first(&comp("3"), &even).unwrap();
        assert_eq!(got, Peeled::Decremented(comp("2")));
        assert_eq!(unpeel(&got, &even).unwrap(), comp("3"));
    }

    #[test]
    fn guards() {
        let even = ColoringScheme::even();
        assert_eq!(
            peel_first(&comp("1"), &even),
            Err(BijectionError::PeelTooSmall)
        );
        assert_eq!(
            peel_first(&comp("2_1"), &ColoringScheme::odd()),
            Err(BijectionError::PeelColoredFirst)
        );
        assert!(peel_first(&comp("1_1+1"), &even).is_err());
    }

    #[test]
    fn image_counts_split_by_branch() {
        for (m, class) in [(2, 2), (3, 2), (3, 3)] {
            let scheme = ColoringScheme::positional(m, class).unwrap();
            let lower = ColoringScheme::positional(m, class - 1).unwrap();
            for total in 2..=9u64 {
                let mut decremented = 0u64;
                let mut removed = 0u64;
                for c in enumerate(&scheme, total).unwrap() {
                    match peel_first(&c, &scheme).unwrap() {
                        Peeled::Decremented(_) => decremented += 1,
                        Peeled::Removed(_) => removed += 1,
                    }
                }
                assert_eq!(count_dp(&scheme, total - 1), decremented.into());
                assert_eq!(count_dp(&lower, total - 1), removed.into());
            }
        }
    }

    #[test]
    fn roundtrips_both_ways() {
        let scheme = ColoringScheme::positional(3, 3).unwrap();
        for total in 2..=8u64 {
            for c in enumerate(&scheme, total).unwrap() {
                let peeled = peel_first(&c, &scheme).unwrap();
                assert_eq!(unpeel(&peeled, &scheme).unwrap(), c);
            }
        }
        let lower = ColoringScheme::positional(3, 2).unwrap();
        for total in 1..=7u64 {
            for c in enumerate(&scheme, total).unwrap() {
                let wrapped = Peeled::Decremented(c.clone());
                assert_eq!(
                    peel_first(&unpeel(&wrapped, &scheme).unwrap(), &scheme).unwrap(),
                    wrapped
                );
            }
            for c in enumerate(&lower, total).unwrap() {
                let wrapped = Peeled::Removed(c.clone());
                assert_eq!(
                    peel_first(&unpeel(&wrapped, &scheme).unwrap(), &scheme).unwrap(),
                    wrapped
                );
            }
        }
    }
}
