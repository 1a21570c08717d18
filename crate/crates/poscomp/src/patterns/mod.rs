//! Permutation pattern avoidance and the exchange-block parser, plus the
//! constrained ternary/binary strings used by the string correspondences.

mod strings;

pub use strings::{
    enumerate_ternary, run_product, BinaryString, TernaryBoundary, TernaryIter, TernaryString,
};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("values must form a permutation of 1..=k (problem near value {value})")]
    NotAPermutation { value: u64 },
    #[error("empty permutation")]
    EmptyPermutation,
    #[error("block parse failed at index {position}: expected bottom value {expected}, found {found}")]
    BlockBottomMismatch {
        position: usize,
        expected: u64,
        found: u64,
    },
    #[error("block parse failed: permutation ends before bottom value {expected}")]
    BlockTruncated { expected: u64 },
    #[error("permutation literal parse error at byte {at}: {what}")]
    Parse { at: usize, what: String },
    #[error("string digit '{found}' at index {index} is out of range")]
    BadDigit { index: usize, found: char },
    #[error("forbidden substring {pair:?} at index {index}")]
    ForbiddenPair { index: usize, pair: (u8, u8) },
    #[error("string must not start with 2 (index 0)")]
    StartsWithTwo,
    #[error("string must not end with 0 (index {index})")]
    EndsWithZero { index: usize },
    #[error("empty string")]
    EmptyString,
    #[error("exhaustive permutation filtering is capped at k = {cap}; count via the EVEN sequence instead")]
    TooLarge { cap: usize },
}

/// A permutation of `1..=k`, stored one-line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<u64>,
}

impl Permutation {
    pub fn new(values: Vec<u64>) -> Result<Self, PatternError> {
        if values.is_empty() {
            return Err(PatternError::EmptyPermutation);
        }
        let k = values.len() as u64;
        let mut seen = vec![false; values.len()];
        for &v in &values {
            if v == 0 || v > k || seen[(v - 1) as usize] {
                return Err(PatternError::NotAPermutation { value: v });
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(k: usize) -> Self {
        Permutation {
            values: (1..=k as u64).collect(),
        }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl FromStr for Permutation {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, PatternError> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        if inner.trim().is_empty() {
            return Err(PatternError::EmptyPermutation);
        }
        let values = inner
            .split(',')
            .map(|tok| {
                tok.trim().parse::<u64>().map_err(|_| PatternError::Parse {
                    at: 0,
                    what: format!("'{}' is not an integer", tok.trim()),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// True iff some subsequence of `p` is order-isomorphic to `pattern`.
/// Plain backtracking; intended for desk-scale inputs.
pub fn contains_pattern(p: &Permutation, pattern: &Permutation) -> bool {
    let values = p.values();
    let pat = pattern.values();
    if pat.len() > values.len() {
        return false;
    }

    fn search(values: &[u64], pat: &[u64], chosen: &mut Vec<u64>, start: usize) -> bool {
        if chosen.len() == pat.len() {
            return true;
        }
        let idx = chosen.len();
        for i in start..values.len() {
            if values.len() - i < pat.len() - idx {
                break;
            }
            let v = values[i];
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(j, &w)| (w < v) == (pat[j] < pat[idx]));
            if consistent {
                chosen.push(v);
                if search(values, pat, chosen, i + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    search(values, pat, &mut Vec::with_capacity(pat.len()), 0)
}

/// One segment of a block decomposition.
///
/// A `Run(c)` is a stretch of `c` consecutive increasing values starting
/// at the smallest value not yet used. A `Block { top, bottom }` is an
/// exchange block: the top `top` values of a consecutive range in
/// increasing order followed by its bottom `bottom` values in increasing
/// order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Segment {
    Run(u64),
    Block { top: u64, bottom: u64 },
}

/// The unique greedy decomposition of a permutation into runs and
/// exchange blocks. `segments` alternates `Run`, `Block`, `Run`, `Block`,
/// ... (ending with a `Block`); runs of length 0 before or between
/// blocks are materialized explicitly. The final run is `trailing`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub segments: Vec<Segment>,
    pub trailing: u64,
}

impl BlockDecomposition {
    /// Rebuild the permutation this decomposition came from.
    pub fn reassemble(&self) -> Permutation {
        let mut values = Vec::new();
        let mut smallest = 1u64;
        for seg in &self.segments {
            match *seg {
                Segment::Run(c) => {
                    values.extend(smallest..smallest + c);
                    smallest += c;
                }
                Segment::Block { top, bottom } => {
                    let split = smallest + bottom;
                    values.extend(split..split + top);
                    values.extend(smallest..split);
                    smallest += top + bottom;
                }
            }
        }
        values.extend(smallest..smallest + self.trailing);
        Permutation::new(values).expect("reassembly covers 1..=k exactly")
    }
}

/// Greedy left-to-right block parse.
///
/// Maintains the smallest unused value `s`. A value equal to `s` extends
/// the current run; a value `t > s` opens a block whose top segment reads
/// consecutive increasing values from `t` and whose bottom segment must
/// then read `s..t` in order. Succeeds exactly on the permutations that
/// avoid 321, 2413 and 3142.
pub fn parse_blocks(p: &Permutation) -> Result<BlockDecomposition, PatternError> {
    let v = p.values();
    let mut segments = Vec::new();
    let mut i = 0usize;
    let mut smallest = 1u64;
    loop {
        let mut run = 0u64;
        while i < v.len() && v[i] == smallest {
            i += 1;
            smallest += 1;
            run += 1;
        }
        if i == v.len() {
            return Ok(BlockDecomposition {
                segments,
                trailing: run,
            });
        }
        segments.push(Segment::Run(run));
        // v[i] > smallest: open a block with top values t, t+1, ...
        let t = v[i];
        let mut top = 0u64;
        while i < v.len() && v[i] == t + top {
            i += 1;
            top += 1;
        }
        for expected in smallest..t {
            match v.get(i) {
                None => return Err(PatternError::BlockTruncated { expected }),
                Some(&found) if found != expected => {
                    return Err(PatternError::BlockBottomMismatch {
                        position: i,
                        expected,
                        found,
                    })
                }
                Some(_) => i += 1,
            }
        }
        segments.push(Segment::Block {
            top,
            bottom: t - smallest,
        });
        smallest = t + top;
    }
}

const PATTERN_CAP: usize = 10;

/// All permutations of `[k]` that pass [`parse_blocks`], in lexicographic
/// order. Filters all `k!` permutations, so `k` is capped at 10.
pub fn enumerate_321_separable(k: usize) -> Result<Vec<Permutation>, PatternError> {
    if k > PATTERN_CAP {
        return Err(PatternError::TooLarge { cap: PATTERN_CAP });
    }
    let mut current: Vec<u64> = (1..=k as u64).collect();
    let mut out = Vec::new();
    loop {
        let p = Permutation::new(current.clone()).expect("candidate is a permutation");
        if parse_blocks(&p).is_ok() {
            out.push(p);
        }
        if !next_permutation(&mut current) {
            return Ok(out);
        }
    }
}

/// In-place lexicographic successor; false once the values are in
/// descending order.
pub(crate) fn next_permutation(v: &mut [u64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn permutation_literals() {
        assert_eq!(perm("(1,2,3)"), Permutation::identity(3));
        assert_eq!(perm("1, 2, 3"), Permutation::identity(3));
        assert_eq!(perm("3,1,2").to_string(), "3,1,2");
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("1,3".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn containment_basics() {
        assert!(contains_pattern(&perm("3,2,1"), &perm("3,2,1")));
        assert!(!contains_pattern(&perm("1,2,3"), &perm("2,1")));
        assert!(contains_pattern(&perm("2,4,1,3"), &perm("2,4,1,3")));
        let fig = perm("1,2,6,7,3,4,5,8,9,10,12,13,11");
        for pat in ["3,2,1", "2,4,1,3", "3,1,4,2"] {
            assert!(!contains_pattern(&fig, &perm(pat)));
        }
    }

    #[test]
    fn block_parse_of_the_long_example() {
        let p = perm("1,2,6,7,3,4,5,8,9,10,12,13,11");
        let d = parse_blocks(&p).unwrap();
        assert_eq!(
            d.segments,
            vec![
                Segment::Run(2),
                Segment::Block { top: 2, bottom: 3 },
                Segment::Run(3),
                Segment::Block { top: 2, bottom: 1 },
            ]
        );
        assert_eq!(d.trailing, 0);
        assert_eq!(d.reassemble(), p);
    }

    #[test]
    fn block_parse_failures() {
        let err = parse_blocks(&perm("3,2,1")).unwrap_err();
        assert_eq!(
            err,
            PatternError::BlockBottomMismatch {
                position: 1,
                expected: 1,
                found: 2
            }
        );
        assert!(parse_blocks(&perm("2,4,1,3")).is_err());
        assert!(parse_blocks(&perm("3,1,4,2")).is_err());
    }

    #[test]
    fn block_parse_small() {
        let d = parse_blocks(&perm("2,1,3")).unwrap();
        assert_eq!(
            d.segments,
            vec![Segment::Run(0), Segment::Block { top: 1, bottom: 1 }]
        );
        assert_eq!(d.trailing, 1);
        let id = parse_blocks(&Permutation::identity(4)).unwrap();
        assert!(id.segments.is_empty());
        assert_eq!(id.trailing, 4);
    }

    #[test]
    fn parse_matches_pattern_avoidance_up_to_six() {
        let patterns = [perm("3,2,1"), perm("2,4,1,3"), perm("3,1,4,2")];
        for k in 1..=6 {
            let mut values: Vec<u64> = (1..=k as u64).collect();
            loop {
                let p = Permutation::new(values.clone()).unwrap();
                let avoids = patterns.iter().all(|pat| !contains_pattern(&p, pat));
                assert_eq!(parse_blocks(&p).is_ok(), avoids, "{p}");
                if !next_permutation(&mut values) {
                    break;
                }
            }
        }
    }

    #[test]
    fn enumerate_small_separable() {
        let three = enumerate_321_separable(3).unwrap();
        let shown: Vec<String> = three.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2"]);
        assert_eq!(enumerate_321_separable(1).unwrap().len(), 1);
        assert_eq!(enumerate_321_separable(4).unwrap().len(), 12);
        assert!(matches!(
            enumerate_321_separable(11),
            Err(PatternError::TooLarge { .. })
        ));
    }
}
