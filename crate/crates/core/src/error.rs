use thiserror::Error;

use crate::ring::RingSpec;

/// Errors produced by ring arithmetic, inverse constructions and scans.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingSpec, right: RingSpec },

    #[error("operation requires a matrix ring, got {0}")]
    NotMatrix(RingSpec),

    #[error("ring {0} is infinite and cannot be enumerated")]
    NotFinite(RingSpec),

    #[error("ring {ring} has {size} elements, above the cap of {cap}")]
    RingTooLarge {
        ring: RingSpec,
        size: String,
        cap: u64,
    },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("2 is not a unit in {0}")]
    TwoNotUnit(RingSpec),

    #[error("idempotent lifting did not converge within {iterations} iterations")]
    NonConvergence { iterations: u32 },

    /// A construction produced an element that fails its own defining axioms.
    #[error("internal verification failed: {0}")]
    Verification(String),

    /// A formula claimed by a transfer law failed at a concrete instance.
    #[error("theorem instance violation: {0}")]
    TheoremViolation(String),

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
