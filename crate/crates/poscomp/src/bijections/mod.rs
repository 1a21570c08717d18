//! Executable forward/inverse maps between the composition families and
//! their equinumerous partners. Every map here has an inverse, and the
//! test suites check both roundtrip directions over full enumerations.

mod binary;
mod choose2;
mod color2;
mod peel;
mod perm;
mod ternary;

pub use binary::{binary_to_skeleton, comp_to_binary, odd_binary_variant};
pub use choose2::{choose_two_to_odd, odd_tiling_form, odd_to_choose_two};
pub use color2::{color2_to_even, even_to_color2};
pub use peel::{peel_first, unpeel, Peeled};
pub use perm::{even_to_perm, perm_to_even};
pub use ternary::{even_to_ternary, ternary_to_even};

use thiserror::Error;

use crate::comp::{ColoringScheme, CompError};
use crate::patterns::PatternError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("input composition is not valid under {scheme:?}")]
    InvalidUnderScheme { scheme: ColoringScheme },
    #[error("input must avoid color 2 (found at position {position})")]
    ColorTwoPresent { position: usize },
    #[error("binary string must start with 1")]
    MustStartWithOne,
    #[error("peeling needs a total of at least 2")]
    PeelTooSmall,
    #[error("peeling requires an uncolored first position (scheme class must not be 1)")]
    PeelColoredFirst,
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Comp(#[from] CompError),
}
