//! Split/merge map between n-color compositions avoiding color 2 and
//! EVEN colored compositions of the same total.

use super::BijectionError;
use crate::comp::{ColoredComposition, ColoringScheme, Part};

/// Forward map: scan the evolving composition left to right. An
/// odd-positioned part `p` with color `c >= 3` splits into an uncolored
/// `c - 2` followed by `p - c + 2` colored 2 (which thereby lands on an
/// even position); an odd-positioned part with color 1 just drops its
/// color; even-positioned parts keep their colors. Positions are
/// re-evaluated after each split.
pub fn color2_to_even(comp: &ColoredComposition) -> Result<ColoredComposition, BijectionError> {
    let restrict2 = ColoringScheme::restrict_colors(2, 0).expect("lo = 2 is legal");
    if !restrict2.validate(comp) {
        if let Some(position) = comp.parts().iter().position(|p| p.color() == Some(2)) {
            return Err(BijectionError::ColorTwoPresent { position });
        }
        return Err(BijectionError::InvalidUnderScheme { scheme: restrict2 });
    }
    let mut parts: Vec<Part> = comp.parts().to_vec();
    let mut i = 0;
    while i < parts.len() {
        if i % 2 == 0 {
            // odd position in 1-indexed terms
            let size = parts[i].size();
            let color = parts[i].color().expect("restricted parts are colored");
            if color == 1 {
                parts[i] = Part::uncolored(size)?;
            } else {
                parts.splice(
                    i..=i,
                    [Part::uncolored(color - 2)?, Part::colored(size - color + 2, 2)?],
                );
                i += 1; // the freshly inserted even-positioned part stays
            }
        }
        i += 1;
    }
    let result = ColoredComposition::new(parts)?;
    debug_assert!(ColoringScheme::even().validate(&result));
    debug_assert_eq!(result.total(), comp.total());
    Ok(result)
}

/// Inverse map: pair the parts of an EVEN composition as (odd position,
/// even position) in order. A pair `(p, q_2)` merges into `(p + q)`
/// colored `p + 2`; any other pair `(p, q_c)` becomes `p_1` followed by
/// `q_c`; a trailing unpaired part becomes `p_1`.
pub fn even_to_color2(comp: &ColoredComposition) -> Result<ColoredComposition, BijectionError> {
    let even = ColoringScheme::even();
    if !even.validate(comp) {
        return Err(BijectionError::InvalidUnderScheme { scheme: even });
    }
    let mut parts = Vec::with_capacity(comp.parts().len());
    let mut chunks = comp.parts().chunks_exact(2);
    for pair in chunks.by_ref() {
        let p = pair[0].size();
        let q = pair[1].size();
        match pair[1].color().expect("even positions are colored") {
            2 => parts.push(Part::colored(p + q, p + 2)?),
            c => {
                parts.push(Part::colored(p, 1)?);
                parts.push(Part::colored(q, c)?);
            }
        }
    }
    if let [last] = chunks.remainder() {
        parts.push(Part::colored(last.size(), 1)?);
    }
    let result = ColoredComposition::new(parts)?;
    debug_assert!(ColoringScheme::restrict_colors(2, 0).unwrap().validate(&result));
    debug_assert_eq!(result.total(), comp.total());
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp::enumerate;

    fn comp(s: &str) -> ColoredComposition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_forward() {
        let got = color2_to_even(&comp("3_3+1_1+6_4+4_4")).unwrap();
        assert_eq!(got.to_string(), "1+2_2+1+6_4+2+2_2");
    }

    #[test]
    fn worked_example_backward() {
        let got = even_to_color2(&comp("1+2_2+1+6_4+2+2_2")).unwrap();
        assert_eq!(got.to_string(), "3_3+1_1+6_4+4_4");
    }

    #[test]
    fn all_color_one_just_drops_colors() {
        let got = color2_to_even(&comp("1_1+1_1+1_1")).unwrap();
        assert_eq!(got.to_string(), "1+1_1+1");
        let back = even_to_color2(&got).unwrap();
        assert_eq!(back.to_string(), "1_1+1_1+1_1");
    }

    #[test]
    fn single_part_drops_color() {
        assert_eq!(color2_to_even(&comp("3_1")).unwrap().to_string(), "3");
    }

    #[test]
    fn merge_of_a_short_pair() {
        assert_eq!(even_to_color2(&comp("1+2_2")).unwrap().to_string(), "3_3");
        assert_eq!(color2_to_even(&comp("3_3")).unwrap().to_string(), "1+2_2");
    }

    #[test]
    fn rejects_color_two() {
        let err = color2_to_even(&comp("1_1+2_2")).unwrap_err();
        assert_eq!(err, BijectionError::ColorTwoPresent { position: 1 });
    }

    #[test]
    fn rejects_non_even_input() {
        assert!(even_to_color2(&comp("1_1")).is_err());
    }

    #[test]
    fn roundtrips_to_nine() {
        let restrict2 = ColoringScheme::restrict_colors(2, 0).unwrap();
        for n in 1..=9 {
            for c in enumerate(&restrict2, n).unwrap() {
                let fwd = color2_to_even(&c).unwrap();
                assert!(ColoringScheme::even().validate(&fwd));
                assert_eq!(even_to_color2(&fwd).unwrap(), c);
            }
            for c in enumerate(&ColoringScheme::even(), n).unwrap() {
                let back = even_to_color2(&c).unwrap();
                assert!(restrict2.validate(&back));
                assert_eq!(color2_to_even(&back).unwrap(), c);
            }
        }
    }
}
