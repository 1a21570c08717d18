//! Coloring schemes: which positions of a composition carry a color and
//! how many color choices a part admits there.

use super::{ColoredComposition, CompError};

/// A positional coloring rule.
///
/// * `Positional { modulus: m, class: k }` — parts at 1-indexed positions
///   `p` with `p ≡ k (mod m)` carry a color in `1..=size`; all other
///   parts are uncolored. The class is stored normalized to `1..=m`
///   (residue 0 is represented as `m`), so `(2, 2)` is the EVEN rule and
///   `(2, 1)` the ODD rule.
/// * `RestrictColors { lo, d }` — every part is colored, but the colors
///   `lo..=lo+d` are banned. `lo >= 2` so that color 1 is always
///   available.
/// * `ChooseTwo` — every part carries an unordered pair of spots instead
///   of a single color; handled by [`super::ChooseTwoComposition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColoringScheme {
    Positional { modulus: u64, class: u64 },
    RestrictColors { lo: u64, d: u64 },
    ChooseTwo,
}

fn normalize_class(modulus: u64, class: u64) -> u64 {
    let r = class % modulus;
    if r == 0 {
        modulus
    } else {
        r
    }
}

impl ColoringScheme {
    /// The `(m, k)` rule with the class normalized into `1..=m`.
    pub fn positional(modulus: u64, class: u64) -> Result<Self, CompError> {
        if modulus == 0 {
            return Err(CompError::ZeroModulus);
        }
        Ok(ColoringScheme::Positional {
            modulus,
            class: normalize_class(modulus, class),
        })
    }

    /// EVEN colored compositions: `(2, 2)`.
    pub fn even() -> Self {
        ColoringScheme::Positional {
            modulus: 2,
            class: 2,
        }
    }

    /// ODD colored compositions: `(2, 1)`.
    pub fn odd() -> Self {
        ColoringScheme::Positional {
            modulus: 2,
            class: 1,
        }
    }

    /// Plain n-color compositions: every position colored, `(1, 1)`.
    pub fn n_color() -> Self {
        ColoringScheme::Positional {
            modulus: 1,
            class: 1,
        }
    }

    pub fn restrict_colors(lo: u64, d: u64) -> Result<Self, CompError> {
        if lo < 2 {
            return Err(CompError::RestrictedBandTooLow);
        }
        Ok(ColoringScheme::RestrictColors { lo, d })
    }

    pub fn choose_two() -> Self {
        ColoringScheme::ChooseTwo
    }

    /// Does the part at 1-indexed `position` carry a color?
    pub fn is_colored_position(&self, position: u64) -> bool {
        match *self {
            ColoringScheme::Positional { modulus, class } => {
                (position - 1) % modulus + 1 == normalize_class(modulus, class)
            }
            ColoringScheme::RestrictColors { .. } => true,
            ColoringScheme::ChooseTwo => true,
        }
    }

    /// Number of distinct decorations a part of `size` admits at
    /// 1-indexed `position` (1 for an uncolored position).
    pub fn color_count(&self, size: u64, position: u64) -> u64 {
        self.color_count_at_class(size, (position - 1) % self.class_count())
    }

    /// Number of position classes the counting DP must distinguish.
    pub(crate) fn class_count(&self) -> u64 {
        match *self {
            ColoringScheme::Positional { modulus, .. } => modulus,
            _ => 1,
        }
    }

    /// Like [`ColoringScheme::color_count`], keyed by 0-based position
    /// class `(position - 1) % class_count`.
    pub(crate) fn color_count_at_class(&self, size: u64, class0: u64) -> u64 {
        match *self {
            ColoringScheme::Positional { modulus, class } => {
                if class0 + 1 == normalize_class(modulus, class) {
                    size
                } else {
                    1
                }
            }
            ColoringScheme::RestrictColors { lo, d } => {
                if size < lo {
                    size
                } else {
                    size - (size.min(lo + d) - lo + 1)
                }
            }
            ColoringScheme::ChooseTwo => size * (size - 1) / 2,
        }
    }

    /// The color picked by 0-based `index` among the allowed colors of a
    /// part, in ascending order. `None` for an uncolored position.
    pub(crate) fn color_by_index(&self, position: u64, index: u64) -> Option<u64> {
        match *self {
            ColoringScheme::Positional { .. } => {
                if self.is_colored_position(position) {
                    Some(index + 1)
                } else {
                    None
                }
            }
            ColoringScheme::RestrictColors { lo, d } => {
                // allowed colors are 1..lo then lo+d+1..=size
                if index + 1 < lo {
                    Some(index + 1)
                } else {
                    Some(index + d + 2)
                }
            }
            ColoringScheme::ChooseTwo => unreachable!("choose-two parts carry pairs, not colors"),
        }
    }

    /// True iff the composition obeys this scheme: colored positions
    /// carry an allowed color and uncolored positions carry none.
    /// `ChooseTwo` always rejects a [`ColoredComposition`].
    pub fn validate(&self, comp: &ColoredComposition) -> bool {
        match *self {
            ColoringScheme::Positional { .. } => {
                comp.parts().iter().enumerate().all(|(i, part)| {
                    if self.is_colored_position(i as u64 + 1) {
                        part.color().is_some()
                    } else {
                        part.color().is_none()
                    }
                })
            }
            ColoringScheme::RestrictColors { lo, d } => comp
                .parts()
                .iter()
                .all(|part| matches!(part.color(), Some(c) if !(lo..=lo + d).contains(&c))),
            ColoringScheme::ChooseTwo => false,
        }
    }
}

/// Scheme-level validity check; equivalent to [`ColoringScheme::validate`].
pub fn validate(comp: &ColoredComposition, scheme: &ColoringScheme) -> bool {
    scheme.validate(comp)
}
