//! Error type shared by every module of the crate.

use alloc::string::String;
use thiserror::Error;

/// Errors raised by constructors, parsers and maps with preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word that must be nonempty was empty.
    #[error("empty word")]
    EmptyWord,
    /// Entry `value` at 1-based `position` breaks `0 <= e_i < i`.
    #[error("entry {value} at position {position} is not below its position")]
    NotInversionSequence {
        /// 1-based position.
        position: usize,
        /// Offending value.
        value: usize,
    },
    /// A pattern was not in reduced form.
    #[error("pattern is not reduced: {0}")]
    NotReduced(String),
    /// `sigma_t` with negative `t` would send a positive entry to zero or below.
    #[error("shift would produce nonpositive entry")]
    ShiftNonPositive,
    /// A map or decomposition was applied to a sequence containing the
    /// pattern it requires to be avoided.
    #[error("input contains pattern {0}")]
    ContainsPattern(&'static str),
    /// The block factorization needs a 021-avoiding input.
    #[error("block decomposition undefined: input contains 021")]
    BlocksUndefined,
    /// A step word is not a Schröder path.
    #[error("invalid Schröder path: {0}")]
    InvalidPath(String),
    /// A word is not a restricted growth function.
    #[error("invalid restricted growth function: {0}")]
    InvalidRgf(String),
    /// A family of sets is not a set partition of `[n]`.
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    /// A word is not a permutation of `[n]`.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    /// Black/white tree where a node shares its right child's color.
    #[error("right-child color clash")]
    RightChildClash,
    /// A parent array is not a 0-1-2 increasing tree.
    #[error("invalid 0-1-2 increasing tree: {0}")]
    InvalidTree(String),
    /// Malformed text input.
    #[error("parse error: {0}")]
    Parse(String),
    /// Statistic or family name not recognized.
    #[error("unknown statistic: {0}")]
    UnknownStatistic(String),
    /// The greedy refill of the 210 to 201 map found no candidate value.
    #[error("no candidate value left while refilling position {0}")]
    EmptyCandidateSet(usize),
}
