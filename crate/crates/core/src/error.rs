//! Error taxonomy shared by every module in the crate.

use thiserror::Error;

/// Unified error type for simulation, closed forms, and sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter lies outside its documented domain (zero sizes,
    /// out-of-range labels, inapplicable formula inputs).
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested run mode is not defined for the given configuration.
    #[error("unsupported mode: {0}")]
    UnsupportedMode(String),

    /// A stated hypothesis of a lemma or scaling rule does not hold for the
    /// given arguments.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An operation was applied to a state that cannot accept it, such as
    /// stepping a finished game or advancing an empty ring.
    #[error("state error: {0}")]
    State(String),

    /// Checked integer arithmetic would overflow; never silently wraps.
    #[error("arithmetic overflow: {0}")]
    Arithmetic(String),

    /// Work refused because it exceeds a configured resource ceiling.
    #[error("resource cap exceeded: {0}")]
    Resource(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
