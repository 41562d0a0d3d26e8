use thiserror::Error;

/// Errors from IO, parsing and the command line.
#[derive(Debug, Error)]
pub enum Error {
    /// Error from the core library.
    #[error(transparent)]
    Core(#[from] invpat_core::Error),
    /// Filesystem error.
    #[error("{context}: {source}")]
    Io {
        /// What was being done.
        context: String,
        /// Underlying error.
        source: std::io::Error,
    },
    /// Malformed JSON, CSV or b-file.
    #[error("parse error: {0}")]
    Parse(String),
    /// Remote fetch failed.
    #[error("fetch of {id} failed: {reason}")]
    Fetch {
        /// Sequence id.
        id: String,
        /// Transport-level reason.
        reason: String,
    },
    /// No bundled or cached b-file for the sequence.
    #[error("no b-file available for {0}")]
    MissingSequence(String),
    /// Bad command-line arguments.
    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { context: context.into(), source }
    }
}
