use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exhaustive operation was asked to run above its configured size bound.
    #[error("resource limit: n = {n} exceeds the configured bound {max_n}")]
    ResourceLimit { n: usize, max_n: usize },

    /// An internal consistency check failed. This indicates a bug, not bad input.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// Exact integer arithmetic overflowed during elimination.
    #[error("arithmetic overflow in exact elimination")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_bound(n: usize, max_n: usize) -> Result<()> {
    if n > max_n {
        Err(Error::ResourceLimit { n, max_n })
    } else {
        Ok(())
    }
}
