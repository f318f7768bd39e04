use thiserror::Error;

/// Errors reported by operations with restricted domains.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// (n, k) lies outside the triangular domain 0 <= k <= n.
    #[error("k = {k} out of range for n = {n}")]
    KOutOfRange { n: usize, k: usize },
    /// Row index past the last materialized row.
    #[error("row {n} out of range (last row is {n_max})")]
    RowOutOfRange { n: usize, n_max: usize },
    /// An argument violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed textual rational.
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
