use std::io;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An input or intermediate value exceeded the supported range.
    #[error("{what}: {value} exceeds the supported limit {limit}")]
    Capacity {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    /// A precondition on the arguments did not hold.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Sieve parameters that produce an empty `Q` sum.
    #[error("unusable sieve parameters: {0}")]
    UnusableParameters(String),

    /// A checkpoint or zero-list file could not be parsed.
    #[error("format error: {0}")]
    Format(String),

    /// Writing a checkpoint failed; the scan was aborted.
    #[error("checkpoint write failed: {0}")]
    CheckpointWrite(#[source] io::Error),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn capacity(what: &'static str, value: impl Into<u128>, limit: impl Into<u128>) -> Self {
        Error::Capacity {
            what,
            value: value.into(),
            limit: limit.into(),
        }
    }
}
