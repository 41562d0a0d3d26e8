#![no_std]
#![warn(missing_docs)]

//! Pattern avoidance in inversion sequences.
//!
//! An inversion sequence of length `n` is a word `(e_1, ..., e_n)` with
//! `0 <= e_i < i`. This crate provides the pieces needed to study the classes
//! `I_n(p)` of inversion sequences avoiding a word pattern `p`:
//!
//! * [`word`]: inversion sequences, reduced patterns, containment and the
//!   positive shift `sigma_t`.
//! * [`stats`] and [`blocks`]: every statistic used by the counting results,
//!   plus the block factorization of 021-avoiders.
//! * [`enumerate`]: pruned depth-first generation of `I_n(p)`, which serves as
//!   the brute-force oracle for everything else.
//! * [`counting`] and [`series`]: exact recurrences, triangles and truncated
//!   power series.
//! * [`structures`]: Schröder paths, black/white trees, restricted growth
//!   functions, permutations and 0-1-2 increasing trees.
//! * [`bijections`]: the explicit maps between those families.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, verification
//! reports and the command-line tool live in the `invpat` crate.

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bijections;
pub mod blocks;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod series;
pub mod stats;
pub mod structures;
pub mod word;

pub use error::Error;
pub use word::{InversionSequence, Pattern};

/// Result alias used throughout the crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;

/// The thirteen patterns of length three, in the order used by the
/// summary table: the six permutation patterns, then the seven with a
/// repeated letter.
pub const LENGTH_THREE_PATTERNS: [&str; 13] = [
    "012", "021", "102", "120", "201", "210", "000", "001", "010", "100", "011", "101", "110",
];
