//! Map between 321-avoiding separable permutations of `[k]` and EVEN
//! colored compositions of `k`, through the block decomposition.
//!
//! A run of `c` consecutive values before a block becomes an odd part
//! `c + 1` (so an empty run still contributes a part of size 1); an
//! exchange block with `a` top and `b` bottom values becomes an even
//! part `a + b - 1` colored `a`; a trailing run of `c` values becomes a
//! final odd part of size `c` (none when empty).

use super::BijectionError;
use crate::comp::{ColoredComposition, ColoringScheme, Part};
use crate::patterns::{parse_blocks, BlockDecomposition, Permutation, Segment};

/// Forward map; fails on permutations containing 321, 2413 or 3142.
pub fn perm_to_even(p: &Permutation) -> Result<ColoredComposition, BijectionError> {
    let decomposition = parse_blocks(p)?;
    let mut parts = Vec::new();
    for segment in &decomposition.segments {
        match *segment {
            Segment::Run(c) => parts.push(Part::uncolored(c + 1)?),
            Segment::Block { top, bottom } => parts.push(Part::colored(top + bottom - 1, top)?),
        }
    }
    if decomposition.trailing > 0 {
        parts.push(Part::uncolored(decomposition.trailing)?);
    }
    let comp = ColoredComposition::new(parts)?;
    debug_assert!(ColoringScheme::even().validate(&comp));
    debug_assert_eq!(comp.total() as usize, p.len());
    Ok(comp)
}

/// Inverse map: rebuild the block decomposition and emit its values. An
/// even part `q` colored `a` opens a block of `a` top and `q + 1 - a`
/// bottom values; odd parts turn back into runs, the last part of an
/// odd-length composition becoming the trailing run.
pub fn even_to_perm(comp: &ColoredComposition) -> Result<Permutation, BijectionError> {
    let even = ColoringScheme::even();
    if !even.validate(comp) {
        return Err(BijectionError::InvalidUnderScheme { scheme: even });
    }
    let parts = comp.parts();
    let mut segments = Vec::new();
    let mut trailing = 0;
    for (idx, part) in parts.iter().enumerate() {
        match part.color() {
            Some(a) => segments.push(Segment::Block {
                top: a,
                bottom: part.size() + 1 - a,
            }),
            None if idx + 1 == parts.len() => trailing = part.size(),
            None => segments.push(Segment::Run(part.size() - 1)),
        }
    }
    Ok(BlockDecomposition { segments, trailing }.reassemble())
}
