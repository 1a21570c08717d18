//! Constrained digit strings.
//!
//! The ternary strings here avoid the substrings "01" and "12"; digit
//! transitions are 0 → {0, 2}, 1 → {1, 0}, 2 → {0, 1, 2}. Enumeration
//! walks that transition table directly instead of filtering all 3^n
//! strings.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use super::PatternError;

/// A string over {0, 1, 2}. No constraint is intrinsic; the avoidance
/// checks live in [`TernaryString::check`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TernaryString {
    digits: Vec<u8>,
}

/// A string over {0, 1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryString {
    digits: Vec<u8>,
}

/// Which boundary conditions a ternary string must satisfy, on top of
/// avoiding "01" and "12".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TernaryBoundary {
    /// Avoidance only.
    Corollary,
    /// Additionally must not start with 2 or end with 0; these are
    /// exactly the images of EVEN colored compositions.
    EvenImage,
}

impl TernaryString {
    pub fn new(digits: Vec<u8>) -> Result<Self, PatternError> {
        if let Some((index, &d)) = digits.iter().enumerate().find(|&(_, &d)| d > 2) {
            return Err(PatternError::BadDigit {
                index,
                found: (b'0' + d) as char,
            });
        }
        Ok(TernaryString { digits })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Validate avoidance (and boundary digits for
    /// [`TernaryBoundary::EvenImage`]), reporting the first offending
    /// index.
    pub fn check(&self, boundary: TernaryBoundary) -> Result<(), PatternError> {
        for (i, w) in self.digits.windows(2).enumerate() {
            if (w[0] == 0 && w[1] == 1) || (w[0] == 1 && w[1] == 2) {
                return Err(PatternError::ForbiddenPair {
                    index: i,
                    pair: (w[0], w[1]),
                });
            }
        }
        if boundary == TernaryBoundary::EvenImage {
            if self.digits.first() == Some(&2) {
                return Err(PatternError::StartsWithTwo);
            }
            if self.digits.last() == Some(&0) {
                return Err(PatternError::EndsWithZero {
                    index: self.digits.len() - 1,
                });
            }
        }
        Ok(())
    }
}

impl BinaryString {
    pub fn new(digits: Vec<u8>) -> Result<Self, PatternError> {
        if let Some((index, &d)) = digits.iter().enumerate().find(|&(_, &d)| d > 1) {
            return Err(PatternError::BadDigit {
                index,
                found: (b'0' + d) as char,
            });
        }
        Ok(BinaryString { digits })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

fn parse_digits(s: &str, radix: u8) -> Result<Vec<u8>, PatternError> {
    s.chars()
        .enumerate()
        .map(|(index, ch)| match ch.to_digit(10) {
            Some(d) if d < radix as u32 => Ok(d as u8),
            _ => Err(PatternError::BadDigit { index, found: ch }),
        })
        .collect()
}

impl FromStr for TernaryString {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, PatternError> {
        Ok(TernaryString {
            digits: parse_digits(s, 3)?,
        })
    }
}

impl FromStr for BinaryString {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, PatternError> {
        Ok(BinaryString {
            digits: parse_digits(s, 2)?,
        })
    }
}

impl fmt::Display for TernaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Digits that may follow `d` without creating "01" or "12", ascending.
fn successors(d: u8) -> &'static [u8] {
    match d {
        0 => &[0, 2],
        1 => &[0, 1],
        _ => &[0, 1, 2],
    }
}

fn first_digits(boundary: TernaryBoundary) -> &'static [u8] {
    match boundary {
        TernaryBoundary::Corollary => &[0, 1, 2],
        TernaryBoundary::EvenImage => &[0, 1],
    }
}

/// Lexicographic stream of the valid ternary strings of a fixed length.
pub struct TernaryIter {
    len: usize,
    boundary: TernaryBoundary,
    digits: Vec<u8>,
    state: IterState,
}

enum IterState {
    Fresh,
    Running,
    Done,
}

impl TernaryIter {
    fn advance(&mut self) -> bool {
        match self.state {
            IterState::Done => false,
            IterState::Fresh => {
                self.state = IterState::Running;
                // all-zero is the lexicographic minimum and always legal
                self.digits = vec![0; self.len];
                true
            }
            IterState::Running => {
                for i in (0..self.len).rev() {
                    let allowed = if i == 0 {
                        first_digits(self.boundary)
                    } else {
                        successors(self.digits[i - 1])
                    };
                    if let Some(&next) = allowed.iter().find(|&&d| d > self.digits[i]) {
                        self.digits[i] = next;
                        for j in i + 1..self.len {
                            self.digits[j] = 0;
                        }
                        return true;
                    }
                }
                self.state = IterState::Done;
                false
            }
        }
    }
}

impl Iterator for TernaryIter {
    type Item = TernaryString;

    fn next(&mut self) -> Option<TernaryString> {
        loop {
            if !self.advance() {
                return None;
            }
            if self.boundary == TernaryBoundary::EvenImage && self.digits.last() == Some(&0) {
                continue;
            }
            return Some(TernaryString {
                digits: self.digits.clone(),
            });
        }
    }
}

/// All "01"- and "12"-avoiding ternary strings of length `len` under the
/// given boundary rule, lexicographically. Length 0 yields the single
/// empty string.
pub fn enumerate_ternary(len: usize, boundary: TernaryBoundary) -> TernaryIter {
    TernaryIter {
        len,
        boundary,
        digits: Vec::new(),
        state: IterState::Fresh,
    }
}

/// Product of the lengths of the maximal runs of 1's; the empty product
/// is 1.
pub fn run_product(s: &BinaryString) -> BigUint {
    let mut product = BigUint::one();
    let mut run = 0u64;
    for &d in s.digits() {
        if d == 1 {
            run += 1;
        } else if run > 0 {
            product *= run;
            run = 0;
        }
    }
    if run > 0 {
        product *= run;
    }
    product
}
