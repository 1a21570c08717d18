//! Positional n-color compositions.
//!
//! A composition is an ordered sum of positive integers (parts). In an
//! n-color composition a part of size `k` additionally carries a color in
//! `1..=k`. This crate works with *positional* coloring rules: only parts
//! at certain positions are colored, and the rest stay plain.
//!
//! The crate provides:
//!
//! - [`comp`] — the domain types ([`comp::ColoredComposition`],
//!   [`comp::ColoringScheme`], spotted tilings) with exhaustive
//!   enumeration and exact dynamic-programming counts,
//! - [`series`] — integer polynomials, rational generating functions and
//!   coefficient extraction via denominator recurrences,
//! - [`patterns`] — permutation pattern avoidance, the exchange-block
//!   parser for 321-avoiding separable permutations, and constrained
//!   ternary/binary string enumerators,
//! - [`bijections`] — executable, invertible maps between the composition
//!   families and the objects in [`patterns`],
//! - [`oeis`] — a b-file client with bundled fixtures for cross-checking
//!   computed sequences against A034943 and A095263,
//! - [`verify`] — the named property suites behind the CLI `verify`
//!   subcommand.
//!
//! All values are immutable after construction and all operations are
//! pure, so everything here is safe to use from multiple threads.

pub mod bijections;
pub mod comp;
pub mod oeis;
pub mod patterns;
pub mod series;
pub mod verify;

pub use comp::{
    count_dp, enumerate, enumerate_choose_two, ChooseTwoComposition, ColoredComposition,
    ColoringScheme, CompError, Part, SpottedTiling,
};
pub use patterns::Permutation;
pub use series::{expand, gf_even, gf_mk, gf_odd, IntPoly, RationalGf, SeriesExpansion};
