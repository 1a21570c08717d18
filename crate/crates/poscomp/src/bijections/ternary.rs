//! Boundary-line encoding of EVEN colored compositions as ternary
//! strings of the same length.
//!
//! Lay the composition out as a tiling and read the vertical line after
//! each of the `k` cells (the final line included, the leading edge
//! excluded):
//!
//! * a line strictly inside an odd-positioned part → 1,
//! * a line before the spot of an even-positioned part, including the
//!   line that starts the part → 0,
//! * a line after the spot, including the line that ends the part → 2,
//! * the final line of a tiling ending on an odd part → 1.
//!
//! The images are exactly the "01"- and "12"-avoiding strings that do
//! not start with 2 or end with 0.

use super::BijectionError;
use crate::comp::{ColoredComposition, ColoringScheme, Part};
use crate::patterns::{TernaryBoundary, TernaryString};

/// Encode an EVEN composition of `k` as a ternary string of length `k`.
pub fn even_to_ternary(comp: &ColoredComposition) -> Result<TernaryString, BijectionError> {
    let even = ColoringScheme::even();
    if !even.validate(comp) {
        return Err(BijectionError::InvalidUnderScheme { scheme: even });
    }
    let parts = comp.parts();
    let mut digits = Vec::with_capacity(comp.total() as usize);
    for (idx, part) in parts.iter().enumerate() {
        let even_position = idx % 2 == 1;
        let last_part = idx + 1 == parts.len();
        let size = part.size();
        for cell in 1..=size {
            let digit = if cell < size {
                // interior line of this part
                match part.color() {
                    None => 1,
                    Some(c) if cell < c => 0,
                    Some(_) => 2,
                }
            } else if last_part {
                // final line of the whole tiling
                if even_position {
                    2
                } else {
                    1
                }
            } else if !even_position {
                // boundary into the next (even) part: its starting line
                0
            } else {
                // boundary leaving this even part: its ending line
                2
            };
            digits.push(digit);
        }
    }
    let s = TernaryString::new(digits).expect("digits are 0..=2");
    debug_assert!(s.check(TernaryBoundary::EvenImage).is_ok());
    Ok(s)
}

/// Decode a ternary string back into an EVEN composition.
///
/// Maximal non-terminal runs of `r` ones become odd parts of size
/// `r + 1` (an empty run at the string start or between a 2 and a 0
/// gives a part of size 1); a block of `a` zeros followed by `b` twos
/// becomes an even part of size `a + b - 1` colored `a`; a terminal run
/// of `r` ones becomes a final odd part of size `r`, because the final
/// boundary line itself contributes one of those ones.
pub fn ternary_to_even(s: &TernaryString) -> Result<ColoredComposition, BijectionError> {
    if s.is_empty() {
        return Err(crate::patterns::PatternError::EmptyString.into());
    }
    s.check(TernaryBoundary::EvenImage)?;
    let digits = s.digits();
    let mut parts = Vec::new();
    let mut i = 0usize;
    loop {
        let ones = digits[i..].iter().take_while(|&&d| d == 1).count();
        i += ones;
        if i == digits.len() {
            if ones > 0 {
                parts.push(Part::uncolored(ones as u64)?);
            }
            break;
        }
        parts.push(Part::uncolored(ones as u64 + 1)?);
        // a validated string continues with 0^a 2^b here
        let zeros = digits[i..].iter().take_while(|&&d| d == 0).count();
        i += zeros;
        let twos = digits[i..].iter().take_while(|&&d| d == 2).count();
        i += twos;
        debug_assert!(zeros > 0 && twos > 0, "guaranteed by the avoidance checks");
        parts.push(Part::colored((zeros + twos) as u64 - 1, zeros as u64)?);
    }
    let comp = ColoredComposition::new(parts)?;
    debug_assert!(ColoringScheme::even().validate(&comp));
    debug_assert_eq!(comp.total() as usize, s.len());
    Ok(comp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp::enumerate;
    use crate::patterns::enumerate_ternary;

    fn comp(s: &str) -> ColoredComposition {
        s.parse().unwrap()
    }

    fn tern(s: &str) -> TernaryString {
        s.parse().unwrap()
    }

    #[test]
    fn figure_example() {
        let got = even_to_ternary(&comp("1+2_2+1+6_4+4")).unwrap();
        assert_eq!(got.to_string(), "00200002221111");
        let back = ternary_to_even(&tern("00200002221111")).unwrap();
        assert_eq!(back.to_string(), "1+2_2+1+6_4+4");
    }

    #[test]
    fn single_odd_part() {
        assert_eq!(even_to_ternary(&comp("3")).unwrap().to_string(), "111");
        assert_eq!(ternary_to_even(&tern("111")).unwrap().to_string(), "3");
    }

    #[test]
    fn two_cells() {
        assert_eq!(even_to_ternary(&comp("1+1_1")).unwrap().to_string(), "02");
    }

    #[test]
    fn empty_gaps_become_unit_parts() {
        assert_eq!(ternary_to_even(&tern("021")).unwrap().to_string(), "1+1_1+1");
        assert_eq!(even_to_ternary(&comp("1+1_1+1")).unwrap().to_string(), "021");
    }

    #[test]
    fn malformed_strings_name_the_offence() {
        assert!(ternary_to_even(&tern("01")).is_err());
        assert!(ternary_to_even(&tern("12")).is_err());
        assert!(ternary_to_even(&tern("2")).is_err());
        assert!(ternary_to_even(&tern("10")).is_err());
        assert!(ternary_to_even(&TernaryString::new(vec![]).unwrap()).is_err());
    }

    #[test]
    fn rejects_non_even_input() {
        assert!(even_to_ternary(&comp("1_1")).is_err());
    }

    #[test]
    fn roundtrips_to_nine() {
        for n in 1..=9u64 {
            for c in enumerate(&ColoringScheme::even(), n).unwrap() {
                let s = even_to_ternary(&c).unwrap();
                assert_eq!(s.len() as u64, n);
                assert_eq!(ternary_to_even(&s).unwrap(), c);
            }
        }
        for len in 1..=9 {
            for s in enumerate_ternary(len, TernaryBoundary::EvenImage) {
                let c = ternary_to_even(&s).unwrap();
                assert_eq!(even_to_ternary(&c).unwrap(), s);
            }
        }
    }
}
