//! Error type shared across the crate.

/// Errors produced by constructors, search drivers, and verification routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument fell outside a function's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// An edge list did not describe a tree (or a simple graph where one was required).
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    /// A text input could not be parsed; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// A size cap was exceeded and `force` was not set.
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
