use thiserror::Error;

/// Errors produced by polygon construction and the classification pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The convex hull of the input points is a point or a segment.
    #[error("degenerate polygon: convex hull is less than two-dimensional")]
    Degenerate,

    /// An argument was outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An operation was called outside its contract (e.g. a denominator it
    /// is not defined for).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Repositioning into the width box failed even after the brute-force
    /// fallback.
    #[error("failed to reposition polygon into its width box")]
    Reposition,

    /// Invalid classification parameters.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
