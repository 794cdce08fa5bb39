use num_bigint::BigUint;
use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Two values belong to different groups (or different arities of the
    /// same group family) and cannot be combined.
    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    /// Polynomial arities disagree.
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    /// A parameter is outside the operation's domain (n = 0, empty set, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The operation is undefined for this group or transformation theory.
    #[error("unsupported operation: {0}")]
    UnsupportedOperation(String),

    /// A value violates a domain-type invariant (negative coefficient,
    /// probabilities not summing to 1, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The stated multicopy transformation does not hold, so no catalyst
    /// chain can be built from it.
    #[error("not multicopy-feasible: {0}")]
    NotMulticopyFeasible(String),

    /// A supplied catalyst cycle fails its edge conditions.
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    /// An internal postcondition of a constructive procedure failed.
    /// Signals an implementation bug, not a user error.
    #[error("construction invariant violated: {0}")]
    ConstructionInvariantViolated(String),

    /// The brute-force enumeration would exceed the candidate cap.
    #[error("search too large: {candidates} candidates exceed cap {cap}")]
    SearchTooLarge { candidates: BigUint, cap: u64 },

    /// Malformed textual input (rationals, integers, decimals).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
