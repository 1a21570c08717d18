//! Tile-pairing map between ODD colored compositions of `k` and
//! choose-two compositions of `k + 1`.
//!
//! In tiling form an ODD composition's even-positioned (uncolored) parts
//! are drawn with a spot in cell 1. Merging adjacent tile pairs then
//! yields tiles with two spots each; one extra cell accounts for the
//! total growing by one.

use super::BijectionError;
use crate::comp::{
    ChooseTwoComposition, ColoredComposition, ColoringScheme, Part, SpottedPart,
};

/// Is `comp` an ODD composition, either strictly (even positions
/// uncolored) or written in tiling convention (even positions carrying
/// the color 1 that stands for their spot)?
fn odd_in_either_form(comp: &ColoredComposition) -> bool {
    comp.parts().iter().enumerate().all(|(i, p)| {
        if i % 2 == 0 {
            p.color().is_some()
        } else {
            matches!(p.color(), None | Some(1))
        }
    })
}

/// Rewrite an ODD composition in tiling convention, every
/// even-positioned part carrying the color 1 that marks its spot.
pub fn odd_tiling_form(comp: &ColoredComposition) -> Result<ColoredComposition, BijectionError> {
    if !odd_in_either_form(comp) {
        return Err(BijectionError::InvalidUnderScheme {
            scheme: ColoringScheme::odd(),
        });
    }
    let parts = comp
        .parts()
        .iter()
        .map(|p| Part::colored(p.size(), p.color().unwrap_or(1)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ColoredComposition::new(parts)?)
}

/// Forward map. With an even number of parts: merge tile pairs (spots
/// keep their cells) and extend the last tile by one unspotted cell.
/// With an odd number: append a single spotted cell first, then merge.
///
/// Accepts the ODD composition in strict form or in tiling convention
/// (see [`odd_tiling_form`]).
pub fn odd_to_choose_two(
    comp: &ColoredComposition,
) -> Result<ChooseTwoComposition, BijectionError> {
    if !odd_in_either_form(comp) {
        return Err(BijectionError::InvalidUnderScheme {
            scheme: ColoringScheme::odd(),
        });
    }
    // (len, spot) tiles; uncolored parts get their spot at cell 1
    let mut tiles: Vec<(u64, u64)> = comp
        .parts()
        .iter()
        .map(|p| (p.size(), p.color().unwrap_or(1)))
        .collect();
    let even_count = tiles.len() % 2 == 0;
    if !even_count {
        tiles.push((1, 1));
    }
    let mut parts = Vec::with_capacity(tiles.len() / 2);
    for pair in tiles.chunks_exact(2) {
        let (len_a, spot_a) = pair[0];
        let (len_b, spot_b) = pair[1];
        parts.push((len_a + len_b, spot_a, len_a + spot_b));
    }
    if even_count {
        parts.last_mut().expect("at least one pair").0 += 1;
    }
    let parts = parts
        .into_iter()
        .map(|(size, a, b)| SpottedPart::new(size, a, b))
        .collect::<Result<Vec<_>, _>>()?;
    let result = ChooseTwoComposition::new(parts)?;
    debug_assert_eq!(result.total(), comp.total() + 1);
    Ok(result)
}

/// Inverse map: cut every two-spot tile immediately before its second
/// spot, then drop the final cell — removing the last tile entirely when
/// it is a spotted single cell (that was the appended one), otherwise
/// shrinking it by one. The result is in strict form; apply
/// [`odd_tiling_form`] for the spotted notation.
pub fn choose_two_to_odd(
    comp: &ChooseTwoComposition,
) -> Result<ColoredComposition, BijectionError> {
    let mut tiles: Vec<(u64, u64)> = Vec::with_capacity(comp.parts().len() * 2);
    for part in comp.parts() {
        let (a, b) = part.spots();
        tiles.push((b - 1, a));
        tiles.push((part.size() - b + 1, 1));
    }
    let last = tiles.last_mut().expect("compositions are non-empty");
    if last.0 == 1 {
        tiles.pop();
    } else {
        last.0 -= 1;
    }
    let parts = tiles
        .into_iter()
        .enumerate()
        .map(|(i, (len, spot))| {
            if i % 2 == 0 {
                Part::colored(len, spot)
            } else {
                debug_assert_eq!(spot, 1);
                Part::uncolored(len)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let result = ColoredComposition::new(parts)?;
    debug_assert!(ColoringScheme::odd().validate(&result));
    debug_assert_eq!(result.total() + 1, comp.total());
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp::{enumerate, enumerate_choose_two};

    fn comp(s: &str) -> ColoredComposition {
        s.parse().unwrap()
    }

    fn spotted(s: &str) -> ChooseTwoComposition {
        s.parse().unwrap()
    }

    #[test]
    fn even_part_count_example() {
        let got = odd_to_choose_two(&comp("3_3+4_1+6_5+3_1")).unwrap();
        assert_eq!(got.to_string(), "7_{3,4}+10_{5,7}");
        let back = choose_two_to_odd(&got).unwrap();
        assert_eq!(back.to_string(), "3_3+4+6_5+3");
        assert_eq!(odd_tiling_form(&back).unwrap().to_string(), "3_3+4_1+6_5+3_1");
    }

    #[test]
    fn odd_part_count_example() {
        let got = odd_to_choose_two(&comp("4_2+3_1+5_4+2_1+1_1")).unwrap();
        assert_eq!(got.to_string(), "7_{2,5}+7_{4,6}+2_{1,2}");
        let back = choose_two_to_odd(&got).unwrap();
        assert_eq!(odd_tiling_form(&back).unwrap().to_string(), "4_2+3_1+5_4+2_1+1_1");
    }

    #[test]
    fn strict_and_tiling_forms_map_alike() {
        let strict = comp("3_3+4+6_5+3");
        let convention = comp("3_3+4_1+6_5+3_1");
        assert_eq!(
            odd_to_choose_two(&strict).unwrap(),
            odd_to_choose_two(&convention).unwrap()
        );
        // color 2 on an even position is neither form
        assert!(odd_to_choose_two(&comp("3_3+4_2")).is_err());
    }

    #[test]
    fn single_cell() {
        assert_eq!(odd_to_choose_two(&comp("1_1")).unwrap().to_string(), "2_{1,2}");
        assert_eq!(choose_two_to_odd(&spotted("2_{1,2}")).unwrap().to_string(), "1_1");
    }

    #[test]
    fn rejects_non_odd_input() {
        assert!(odd_to_choose_two(&comp("1+2_2")).is_err());
    }

    #[test]
    fn roundtrips_to_nine() {
        for n in 1..=9u64 {
            for c in enumerate(&ColoringScheme::odd(), n).unwrap() {
                let fwd = odd_to_choose_two(&c).unwrap();
                assert_eq!(fwd.total(), n + 1);
                assert_eq!(choose_two_to_odd(&fwd).unwrap(), c);
            }
        }
        for n in 2..=10u64 {
            for ct in enumerate_choose_two(n) {
                let back = choose_two_to_odd(&ct).unwrap();
                assert_eq!(odd_to_choose_two(&back).unwrap(), ct);
            }
        }
    }
}
