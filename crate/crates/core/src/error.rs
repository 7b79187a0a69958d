//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors reported by group, coset and factorization operations.
///
/// The variants are deliberately coarse: callers mostly need to
/// distinguish bad input from exhausted resource bounds and from
/// corrupted data files.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid argument: mismatched degrees, elements outside the group,
    /// indices out of range, malformed type symbols.
    #[error("input error: {0}")]
    Input(String),

    /// A configured bound (enumeration, coset index, group order) was exceeded.
    #[error("resource bound exceeded: {what} needs {needed}, bound is {bound}")]
    Resource {
        what: &'static str,
        needed: u64,
        bound: u64,
    },

    /// A shipped data file failed validation (parse error or order assertion).
    #[error("data error: {0}")]
    Data(String),

    /// An internal consistency check failed; this indicates a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
