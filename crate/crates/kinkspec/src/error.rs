use thiserror::Error;

/// Error type shared by every fallible operation in the crate.
///
/// The split between `Domain` and `Numerics` matters for callers: `Domain`
/// means the inputs violated a documented precondition and retrying with the
/// same arguments is pointless, while `Numerics` means an iterative scheme
/// failed to converge (often fixable with different tolerances or grids).
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the documented domain of an operation.
    #[error("domain: {0}")]
    Domain(String),

    /// A solver or quadrature routine failed to converge; the message names
    /// the offending quantity or subinterval.
    #[error("numerics: {0}")]
    Numerics(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn numerics(msg: impl Into<String>) -> Self {
        Error::Numerics(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
