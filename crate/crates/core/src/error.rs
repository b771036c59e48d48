//! Error type shared by every module in the crate.

use thiserror::Error;

/// Unified error for all fallible operations in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The pair `(r, a)` does not describe a cyclic quotient singularity.
    #[error("invalid parameters r={r}, a={a}: {reason}")]
    InvalidParameters { r: i64, a: i64, reason: String },

    /// A value fell outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A degree-bounded search ran out of room before completing.
    #[error("degree bound {bound} exhausted while {context}")]
    BoundExhausted { bound: i64, context: String },

    /// No certified deformed lift was found for an arrow.
    #[error("no deformed lift certified for arrow {arrow}")]
    LiftExhausted { arrow: String },

    /// A substitution left a variable without a value.
    #[error("no assignment provided for variable {0}")]
    MissingAssignment(String),

    /// Text could not be parsed as a polynomial or fixture.
    #[error("parse error: {0}")]
    Parse(String),

    /// The requested golden fixture does not exist.
    #[error("unknown fixture: {0}")]
    UnknownFixture(String),

    /// A verification check failed.
    #[error("verification failed: {0}")]
    Verification(String),

    /// An internal consistency check failed; this indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
