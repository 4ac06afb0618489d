use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Family/rank pair that is not an irreducible reduced root system.
    #[error("invalid root system type `{0}`")]
    InvalidType(String),
    /// Caller supplied arguments outside an operation's domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A mathematical postcondition failed. Indicates a bug, never bad input.
    #[error("invariant violated: {0}")]
    Invariant(String),
    /// Enumeration would exceed a configured size cap.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
