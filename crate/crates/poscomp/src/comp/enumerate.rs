//! Exhaustive, lazily streamed enumeration of valid compositions.
//!
//! Order is deterministic: part-size sequences ascend lexicographically,
//! and for a fixed skeleton the decorations ascend with the rightmost
//! position varying fastest (colors ascending; spot pairs in `(i, j)`
//! lexicographic order).

use super::{
    ChooseTwoComposition, ColoredComposition, ColoringScheme, CompError, Part, SpottedPart,
};

/// Lexicographic stream of compositions of `total` into parts of size at
/// least `min_part`.
struct SkeletonIter {
    total: u64,
    min_part: u64,
    current: Option<Vec<u64>>,
    started: bool,
}

/// Append the lexicographically smallest tail summing to `rem` with all
/// parts at least `min_part`.
fn descend(path: &mut Vec<u64>, mut rem: u64, min_part: u64) {
    while rem >= min_part {
        if rem - min_part >= min_part {
            path.push(min_part);
            rem -= min_part;
        } else {
            path.push(rem);
            rem = 0;
        }
    }
    debug_assert_eq!(rem, 0, "total not representable with min_part");
}

impl SkeletonIter {
    fn new(total: u64, min_part: u64) -> Self {
        SkeletonIter {
            total,
            min_part,
            current: None,
            started: false,
        }
    }

    fn advance(&mut self) {
        let min_part = self.min_part;
        if !self.started {
            self.started = true;
            if self.total >= min_part && min_part >= 1 {
                let mut path = Vec::new();
                descend(&mut path, self.total, min_part);
                self.current = Some(path);
            }
            return;
        }
        let Some(path) = self.current.as_mut() else {
            return;
        };
        let mut rem = 0u64;
        while let Some(p) = path.pop() {
            rem += p;
            // Replace p with the smallest larger head that leaves a
            // representable remainder (zero, or at least min_part).
            let c = p + 1;
            if c <= rem {
                if rem - c >= min_part {
                    path.push(c);
                    descend(path, rem - c, min_part);
                } else {
                    path.push(rem);
                }
                return;
            }
        }
        self.current = None;
    }
}

impl Iterator for SkeletonIter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        self.advance();
        self.current.clone()
    }
}

/// Streaming enumeration of every composition of `total` valid under a
/// positional or restricted-color scheme, each yielded exactly once.
pub struct CompositionIter {
    scheme: ColoringScheme,
    skeletons: SkeletonIter,
    sizes: Option<Vec<u64>>,
    // per-position cursor into the ascending list of allowed colors
    cursors: Vec<(u64, u64)>, // (index, count)
}

impl CompositionIter {
    fn new(scheme: ColoringScheme, total: u64) -> Self {
        let mut it = CompositionIter {
            scheme,
            skeletons: SkeletonIter::new(total, 1),
            sizes: None,
            cursors: Vec::new(),
        };
        it.next_skeleton();
        it
    }

    fn next_skeleton(&mut self) {
        self.sizes = self.skeletons.next();
        if let Some(sizes) = &self.sizes {
            self.cursors = sizes
                .iter()
                .enumerate()
                .map(|(i, &s)| (0, self.scheme.color_count(s, i as u64 + 1)))
                .collect();
        }
    }

    fn emit(&self) -> Option<ColoredComposition> {
        let sizes = self.sizes.as_ref()?;
        let parts = sizes
            .iter()
            .zip(&self.cursors)
            .enumerate()
            .map(|(i, (&s, &(index, _)))| {
                let color = self.scheme.color_by_index(i as u64 + 1, index);
                Part::new(s, color).expect("enumerated colors are in range")
            })
            .collect();
        Some(ColoredComposition::new(parts).expect("skeletons are non-empty"))
    }

    fn bump(&mut self) {
        for slot in self.cursors.iter_mut().rev() {
            slot.0 += 1;
            if slot.0 < slot.1 {
                return;
            }
            slot.0 = 0;
        }
        self.next_skeleton();
    }
}

impl Iterator for CompositionIter {
    type Item = ColoredComposition;

    fn next(&mut self) -> Option<ColoredComposition> {
        let item = self.emit()?;
        self.bump();
        Some(item)
    }
}

/// Enumerate the compositions of `total` valid under `scheme`.
///
/// The stream length equals [`super::count_dp`] for the same arguments.
/// `ChooseTwo` is rejected here; use [`enumerate_choose_two`].
pub fn enumerate(scheme: &ColoringScheme, total: u64) -> Result<CompositionIter, CompError> {
    if matches!(scheme, ColoringScheme::ChooseTwo) {
        return Err(CompError::ChooseTwoNotColored);
    }
    Ok(CompositionIter::new(*scheme, total))
}

/// Streaming enumeration of choose-two compositions: parts of size at
/// least 2, every spot pair realized exactly once.
pub struct ChooseTwoIter {
    skeletons: SkeletonIter,
    sizes: Option<Vec<u64>>,
    pairs: Vec<(u64, u64)>,
}

impl ChooseTwoIter {
    fn new(total: u64) -> Self {
        let mut it = ChooseTwoIter {
            skeletons: SkeletonIter::new(total, 2),
            sizes: None,
            pairs: Vec::new(),
        };
        it.next_skeleton();
        it
    }

    fn next_skeleton(&mut self) {
        self.sizes = self.skeletons.next();
        if let Some(sizes) = &self.sizes {
            self.pairs = sizes.iter().map(|_| (1, 2)).collect();
        }
    }

    fn emit(&self) -> Option<ChooseTwoComposition> {
        let sizes = self.sizes.as_ref()?;
        let parts = sizes
            .iter()
            .zip(&self.pairs)
            .map(|(&s, &(a, b))| SpottedPart::new(s, a, b).expect("enumerated pairs are in range"))
            .collect();
        Some(ChooseTwoComposition::new(parts).expect("skeletons are non-empty"))
    }

    fn bump(&mut self) {
        let Some(sizes) = self.sizes.as_ref() else {
            return;
        };
        for (i, slot) in self.pairs.iter_mut().enumerate().rev() {
            let size = sizes[i];
            if slot.1 < size {
                slot.1 += 1;
                return;
            }
            if slot.0 + 1 < size {
                slot.0 += 1;
                slot.1 = slot.0 + 1;
                return;
            }
            *slot = (1, 2);
        }
        self.next_skeleton();
    }
}

impl Iterator for ChooseTwoIter {
    type Item = ChooseTwoComposition;

    fn next(&mut self) -> Option<ChooseTwoComposition> {
        let item = self.emit()?;
        self.bump();
        Some(item)
    }
}

/// Enumerate the choose-two compositions of `total` (needs `total >= 2`;
/// smaller totals admit none and yield an empty stream).
pub fn enumerate_choose_two(total: u64) -> ChooseTwoIter {
    ChooseTwoIter::new(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(scheme: &ColoringScheme, n: u64) -> Vec<String> {
        enumerate(scheme, n)
            .unwrap()
            .map(|c| c.to_string())
            .collect()
    }

    #[test]
    fn eight_n_color_compositions_of_three() {
        assert_eq!(
            strings(&ColoringScheme::n_color(), 3),
            ["1_1+1_1+1_1", "1_1+2_1", "1_1+2_2", "2_1+1_1", "2_2+1_1", "3_1", "3_2", "3_3"]
        );
    }

    #[test]
    fn four_uncolored_under_mod_four_class_four() {
        let scheme = ColoringScheme::positional(4, 4).unwrap();
        assert_eq!(strings(&scheme, 3), ["1+1+1", "1+2", "2+1", "3"]);
    }

    #[test]
    fn five_even_compositions_of_three() {
        assert_eq!(
            strings(&ColoringScheme::even(), 3),
            ["1+1_1+1", "1+2_1", "1+2_2", "2+1_1", "3"]
        );
    }

    #[test]
    fn every_item_validates_and_sums() {
        for (m, k) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            let scheme = ColoringScheme::positional(m, k).unwrap();
            for n in 1..=7 {
                for c in enumerate(&scheme, n).unwrap() {
                    assert!(scheme.validate(&c));
                    assert_eq!(c.total(), n);
                }
            }
        }
    }

    #[test]
    fn choose_two_of_three_and_four() {
        let three: Vec<String> = enumerate_choose_two(3).map(|c| c.to_string()).collect();
        assert_eq!(three, ["3_{1,2}", "3_{1,3}", "3_{2,3}"]);
        let two: Vec<String> = enumerate_choose_two(2).map(|c| c.to_string()).collect();
        assert_eq!(two, ["2_{1,2}"]);
        // 2+2 contributes one item, the single part 4 contributes C(4,2) = 6
        assert_eq!(enumerate_choose_two(4).count(), 7);
        assert_eq!(enumerate_choose_two(1).count(), 0);
    }

    #[test]
    fn restricted_enumeration_avoids_band() {
        let scheme = ColoringScheme::restrict_colors(2, 0).unwrap();
        let got = strings(&scheme, 3);
        assert_eq!(got, ["1_1+1_1+1_1", "1_1+2_1", "2_1+1_1", "3_1", "3_3"]);
    }

    #[test]
    fn skeletons_with_min_part_two() {
        let got: Vec<Vec<u64>> = SkeletonIter::new(7, 2).collect();
        assert_eq!(
            got,
            vec![
                vec![2, 2, 3],
                vec![2, 3, 2],
                vec![2, 5],
                vec![3, 2, 2],
                vec![3, 4],
                vec![4, 3],
                vec![5, 2],
                vec![7]
            ]
        );
    }
}
