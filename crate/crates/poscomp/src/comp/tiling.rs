//! Spotted tilings: a row of tiles, one per part, where a spot's cell
//! index inside its tile encodes the part's color.

use super::{ChooseTwoComposition, ColoredComposition, ColoringScheme, CompError, Part};

/// A single tile: `len` cells with zero, one or two spots at strictly
/// increasing cell positions in `1..=len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tile {
    len: u64,
    spots: Vec<u64>,
}

impl Tile {
    pub fn new(len: u64, spots: Vec<u64>) -> Result<Self, CompError> {
        if len == 0 {
            return Err(CompError::ZeroPartSize);
        }
        if spots.len() > 2 || !spots.windows(2).all(|w| w[0] < w[1]) {
            return Err(CompError::BadTileSpots);
        }
        if let Some(&s) = spots.iter().find(|&&s| s == 0 || s > len) {
            return Err(CompError::SpotOutOfTile { len, spot: s });
        }
        Ok(Tile { len, spots })
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn spots(&self) -> &[u64] {
        &self.spots
    }
}

/// An ordered row of tiles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpottedTiling {
    tiles: Vec<Tile>,
}

impl SpottedTiling {
    pub fn new(tiles: Vec<Tile>) -> Self {
        SpottedTiling { tiles }
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn total(&self) -> u64 {
        self.tiles.iter().map(Tile::len).sum()
    }
}

/// How uncolored parts are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpotRule {
    /// Uncolored parts become unspotted tiles.
    ColoredOnly,
    /// Uncolored parts are drawn with a spot in cell 1, the convention
    /// used when pairing tiles into two-spot tiles.
    UncoloredAtCellOne,
}

/// Draw a composition as a spotted tiling: part `p` colored `c` becomes a
/// tile of length `p` with a spot in cell `c`.
pub fn to_tiling(comp: &ColoredComposition, rule: SpotRule) -> SpottedTiling {
    let tiles = comp
        .parts()
        .iter()
        .map(|part| {
            let spots = match (part.color(), rule) {
                (Some(c), _) => vec![c],
                (None, SpotRule::ColoredOnly) => vec![],
                (None, SpotRule::UncoloredAtCellOne) => vec![1],
            };
            Tile::new(part.size(), spots).expect("part colors are in range")
        })
        .collect();
    SpottedTiling::new(tiles)
}

/// Read a tiling back as a composition valid under `scheme`, inverting
/// [`to_tiling`] with the same `rule`. Fails when a spot placement
/// contradicts the scheme.
pub fn from_tiling(
    tiling: &SpottedTiling,
    scheme: &ColoringScheme,
    rule: SpotRule,
) -> Result<ColoredComposition, CompError> {
    let mut parts = Vec::with_capacity(tiling.tiles().len());
    for (index, tile) in tiling.tiles().iter().enumerate() {
        let position = index as u64 + 1;
        let colored = scheme.is_colored_position(position);
        let part = match (tile.spots(), colored, rule) {
            ([spot], true, _) => Part::colored(tile.len(), *spot)?,
            ([], false, SpotRule::ColoredOnly) => Part::uncolored(tile.len())?,
            ([1], false, SpotRule::UncoloredAtCellOne) => Part::uncolored(tile.len())?,
            (spots, _, _) => {
                let reason = match (spots.len(), colored) {
                    (0, true) => "a colored position needs exactly one spot".to_string(),
                    (_, false) => "an uncolored position cannot carry this spot".to_string(),
                    _ => "too many spots for a single color".to_string(),
                };
                return Err(CompError::TilingContradictsScheme { index, reason });
            }
        };
        parts.push(part);
    }
    let comp = ColoredComposition::new(parts)?;
    if !scheme.validate(&comp) {
        return Err(CompError::TilingContradictsScheme {
            index: 0,
            reason: "spot colors violate the scheme".to_string(),
        });
    }
    Ok(comp)
}

impl ChooseTwoComposition {
    /// The two-spot tiling of a choose-two composition.
    pub fn to_tiling(&self) -> SpottedTiling {
        let tiles = self
            .parts()
            .iter()
            .map(|part| {
                let (a, b) = part.spots();
                Tile::new(part.size(), vec![a, b]).expect("spot pairs are in range")
            })
            .collect();
        SpottedTiling::new(tiles)
    }
}

/// ASCII rendering: cells as `[ ]` / `[*]`, heavy bars at tile
/// boundaries. Stable across runs.
pub fn render_tiling(tiling: &SpottedTiling) -> Result<String, CompError> {
    if tiling.tiles().is_empty() {
        return Err(CompError::EmptyTiling);
    }
    let mut out = String::from("|");
    for tile in tiling.tiles() {
        for cell in 1..=tile.len() {
            if tile.spots().contains(&cell) {
                out.push_str("[*]");
            } else {
                out.push_str("[ ]");
            }
        }
        out.push('|');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp::enumerate;

    #[test]
    fn single_colored_parts() {
        let c: ColoredComposition = "3_1".parse().unwrap();
        let t = to_tiling(&c, SpotRule::ColoredOnly);
        assert_eq!(t.tiles(), &[Tile::new(3, vec![1]).unwrap()]);
        let c3: ColoredComposition = "3_3".parse().unwrap();
        let t3 = to_tiling(&c3, SpotRule::ColoredOnly);
        assert_eq!(t3.tiles(), &[Tile::new(3, vec![3]).unwrap()]);
        let plain: ColoredComposition = "4".parse().unwrap();
        let tp = to_tiling(&plain, SpotRule::ColoredOnly);
        assert_eq!(tp.tiles(), &[Tile::new(4, vec![]).unwrap()]);
    }

    #[test]
    fn render_fixed_strings() {
        let t = SpottedTiling::new(vec![Tile::new(3, vec![1]).unwrap()]);
        assert_eq!(render_tiling(&t).unwrap(), "|[*][ ][ ]|");
        let t2 = SpottedTiling::new(vec![
            Tile::new(1, vec![]).unwrap(),
            Tile::new(2, vec![2]).unwrap(),
        ]);
        assert_eq!(render_tiling(&t2).unwrap(), "|[ ]|[ ][*]|");
        assert_eq!(
            render_tiling(&SpottedTiling::new(vec![])),
            Err(CompError::EmptyTiling)
        );
    }

    #[test]
    fn tiling_roundtrip_over_enumerations() {
        for (scheme, rule) in [
            (ColoringScheme::even(), SpotRule::ColoredOnly),
            (ColoringScheme::odd(), SpotRule::UncoloredAtCellOne),
            (ColoringScheme::restrict_colors(2, 0).unwrap(), SpotRule::ColoredOnly),
        ] {
            for n in 1..=7 {
                for c in enumerate(&scheme, n).unwrap() {
                    let t = to_tiling(&c, rule);
                    assert_eq!(from_tiling(&t, &scheme, rule).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn from_tiling_rejects_contradictions() {
        // spot on an odd position under EVEN
        let t = SpottedTiling::new(vec![Tile::new(2, vec![1]).unwrap()]);
        assert!(from_tiling(&t, &ColoringScheme::even(), SpotRule::ColoredOnly).is_err());
        // missing spot on a colored position
        let t = SpottedTiling::new(vec![
            Tile::new(1, vec![]).unwrap(),
            Tile::new(2, vec![]).unwrap(),
        ]);
        assert!(from_tiling(&t, &ColoringScheme::even(), SpotRule::ColoredOnly).is_err());
        // banned color under a restricted scheme
        let t = SpottedTiling::new(vec![Tile::new(2, vec![2]).unwrap()]);
        let restricted = ColoringScheme::restrict_colors(2, 0).unwrap();
        assert!(from_tiling(&t, &restricted, SpotRule::ColoredOnly).is_err());
        // two spots never form a colored composition
        let t = SpottedTiling::new(vec![Tile::new(3, vec![1, 2]).unwrap()]);
        assert!(from_tiling(&t, &ColoringScheme::even(), SpotRule::ColoredOnly).is_err());
    }
}
