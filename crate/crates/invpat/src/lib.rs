//! Standard-library companion to `invpat-core`: parallel counting, JSON and
//! CSV formats, OEIS b-files, the verification harness and the `invpat`
//! command-line tool.

pub mod cli;
pub mod error;
pub mod format;
pub mod oeis;
pub mod parallel;
pub mod verify;

pub use error::Error;

/// Result alias for this crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;
