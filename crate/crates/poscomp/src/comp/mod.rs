//! Core domain types: parts, colored compositions, coloring schemes,
//! spotted tilings, plus exhaustive enumeration and exact counting.

mod count;
mod enumerate;
mod notation;
mod scheme;
mod tiling;

pub use count::count_dp;
pub use enumerate::{enumerate, enumerate_choose_two, ChooseTwoIter, CompositionIter};
pub use scheme::{validate, ColoringScheme};
pub use tiling::{from_tiling, render_tiling, to_tiling, SpotRule, SpottedTiling, Tile};

use thiserror::Error;

/// Errors raised while constructing or transforming the core types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompError {
    #[error("part size must be at least 1")]
    ZeroPartSize,
    #[error("color {color} is out of range for a part of size {size}")]
    ColorOutOfRange { size: u64, color: u64 },
    #[error("a composition needs at least one part")]
    EmptyComposition,
    #[error("position modulus must be at least 1")]
    ZeroModulus,
    #[error("restricted color band must start at 2 or higher so color 1 stays available")]
    RestrictedBandTooLow,
    #[error("spot pair ({first}, {second}) is invalid for a part of size {size}")]
    BadSpotPair { size: u64, first: u64, second: u64 },
    #[error("spotted parts must have size at least 2")]
    SpottedPartTooSmall,
    #[error("tile spot {spot} lies outside a tile of length {len}")]
    SpotOutOfTile { len: u64, spot: u64 },
    #[error("a tile may carry at most two spots, strictly increasing")]
    BadTileSpots,
    #[error("empty tiling")]
    EmptyTiling,
    #[error("tile {index} contradicts the coloring scheme: {reason}")]
    TilingContradictsScheme { index: usize, reason: String },
    #[error("parse error at byte {at}: {what}")]
    Parse { at: usize, what: String },
    #[error("choose-two compositions are enumerated with enumerate_choose_two")]
    ChooseTwoNotColored,
    #[error("total {declared} does not match the part sizes (sum {actual})")]
    TotalMismatch { declared: u64, actual: u64 },
}

/// One part of a composition: a positive size and an optional color in
/// `1..=size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Part {
    size: u64,
    color: Option<u64>,
}

impl Part {
    pub fn new(size: u64, color: Option<u64>) -> Result<Self, CompError> {
        if size == 0 {
            return Err(CompError::ZeroPartSize);
        }
        if let Some(c) = color {
            if c == 0 || c > size {
                return Err(CompError::ColorOutOfRange { size, color: c });
            }
        }
        Ok(Part { size, color })
    }

    pub fn uncolored(size: u64) -> Result<Self, CompError> {
        Part::new(size, None)
    }

    pub fn colored(size: u64, color: u64) -> Result<Self, CompError> {
        Part::new(size, Some(color))
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn color(&self) -> Option<u64> {
        self.color
    }
}

/// An ordered, non-empty list of parts. The total is always the sum of
/// the part sizes. Whether the coloring is *valid* is a property of a
/// composition together with a [`ColoringScheme`]; see
/// [`ColoringScheme::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredComposition {
    parts: Vec<Part>,
}

impl ColoredComposition {
    pub fn new(parts: Vec<Part>) -> Result<Self, CompError> {
        if parts.is_empty() {
            return Err(CompError::EmptyComposition);
        }
        Ok(ColoredComposition { parts })
    }

    /// Build an uncolored composition from part sizes.
    pub fn from_sizes(sizes: &[u64]) -> Result<Self, CompError> {
        let parts = sizes
            .iter()
            .map(|&s| Part::uncolored(s))
            .collect::<Result<Vec<_>, _>>()?;
        ColoredComposition::new(parts)
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().map(Part::size).sum()
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.parts.iter().map(Part::size).collect()
    }

    /// The same parts with every color dropped.
    pub fn skeleton(&self) -> ColoredComposition {
        ColoredComposition {
            parts: self
                .parts
                .iter()
                .map(|p| Part {
                    size: p.size,
                    color: None,
                })
                .collect(),
        }
    }
}

/// One part of a choose-two composition: a size of at least 2 and an
/// unordered pair of distinct spot positions inside the part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpottedPart {
    size: u64,
    spots: (u64, u64),
}

impl SpottedPart {
    pub fn new(size: u64, first: u64, second: u64) -> Result<Self, CompError> {
        if size < 2 {
            return Err(CompError::SpottedPartTooSmall);
        }
        if first == 0 || first >= second || second > size {
            return Err(CompError::BadSpotPair {
                size,
                first,
                second,
            });
        }
        Ok(SpottedPart {
            size,
            spots: (first, second),
        })
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn spots(&self) -> (u64, u64) {
        self.spots
    }
}

/// A composition whose every part carries two distinct spots; a part of
/// size `p` admits `p (p - 1) / 2` spot pairs. Parts of size 1 cannot
/// occur because they admit no pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChooseTwoComposition {
    parts: Vec<SpottedPart>,
}

impl ChooseTwoComposition {
    pub fn new(parts: Vec<SpottedPart>) -> Result<Self, CompError> {
        if parts.is_empty() {
            return Err(CompError::EmptyComposition);
        }
        Ok(ChooseTwoComposition { parts })
    }

    pub fn parts(&self) -> &[SpottedPart] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().map(SpottedPart::size).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn part_rejects_bad_color() {
        assert!(Part::colored(3, 3).is_ok());
        assert_eq!(
            Part::colored(3, 4),
            Err(CompError::ColorOutOfRange { size: 3, color: 4 })
        );
        assert_eq!(
            Part::colored(3, 0),
            Err(CompError::ColorOutOfRange { size: 3, color: 0 })
        );
        assert_eq!(Part::uncolored(0), Err(CompError::ZeroPartSize));
    }

    #[test]
    fn composition_must_be_nonempty() {
        assert_eq!(
            ColoredComposition::new(vec![]),
            Err(CompError::EmptyComposition)
        );
    }

    #[test]
    fn total_is_sum_of_sizes() {
        let c: ColoredComposition = "3_2+4+1+2_1+3+6+1_1".parse().unwrap();
        assert_eq!(c.total(), 20);
    }

    #[test]
    fn spotted_part_invariants() {
        assert!(SpottedPart::new(2, 1, 2).is_ok());
        assert_eq!(
            SpottedPart::new(1, 1, 1),
            Err(CompError::SpottedPartTooSmall)
        );
        assert_eq!(
            SpottedPart::new(3, 2, 2),
            Err(CompError::BadSpotPair {
                size: 3,
                first: 2,
                second: 2
            })
        );
        assert_eq!(
            SpottedPart::new(3, 1, 4),
            Err(CompError::BadSpotPair {
                size: 3,
                first: 1,
                second: 4
            })
        );
    }
}
