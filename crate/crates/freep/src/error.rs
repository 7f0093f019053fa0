use crate::params::ValidationReport;

/// Crate-wide error type.
///
/// `Invariant` marks a violated arithmetic identity that is supposed to hold
/// for every accepted input; seeing one means a bug, not a bad parameter.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The parameter tuple failed validation.
    #[error("invalid parameters\n{0}")]
    InvalidParams(ValidationReport),

    /// Some other input was rejected (zero denominator, residue divisible
    /// by p, wrong regime for the requested computation).
    #[error("invalid input: {0}")]
    Input(String),

    /// An identity that must hold unconditionally was violated.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
