use thiserror::Error;

use crate::algebra::AmbientParams;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(AmbientParams, AmbientParams),

    #[error("invalid vector literal {literal:?}: {reason}")]
    InvalidLiteral { literal: String, reason: String },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("unsupported ambient ({alpha}, {beta}): {reason}")]
    UnsupportedAmbient {
        alpha: usize,
        beta: usize,
        reason: String,
    },

    #[error("enumeration guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inconsistent parameters: {0}")]
    InconsistentParams(String),

    #[error("enumerator is not in the requested invariant ring: {0}")]
    NotInRing(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
