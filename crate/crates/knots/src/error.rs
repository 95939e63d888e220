//! Error type shared across the crate.

use thiserror::Error;

use crate::laurent::ExpUnit;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial unit mismatch: {left:?} vs {right:?}")]
    UnitMismatch { left: ExpUnit, right: ExpUnit },

    #[error("operation undefined on the zero polynomial")]
    EmptyPoly,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid diagram: {0}")]
    Validation(String),

    #[error("operation requires a connected diagram")]
    Split,

    #[error("index {index} out of range (< {len} expected)")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("state enumeration over {crossings} crossings exceeds the cap of {cap} (raise with --cap)")]
    CapExceeded { crossings: usize, cap: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("diagram is already alternating")]
    AlreadyAlternating,

    #[error("invalid family parameters: {0}")]
    Param(String),
}
