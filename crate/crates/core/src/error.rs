use thiserror::Error;

use crate::schubert_index::GrContext;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Grassmannian Gr({r},{n}): need 0 < r < n <= {max}", max = crate::schubert_index::MAX_N)]
    InvalidContext { n: u32, r: u32 },

    #[error("invalid Schubert index: {0}")]
    InvalidIndex(String),

    #[error("context mismatch: {left} vs {right}")]
    ContextMismatch { left: GrContext, right: GrContext },

    #[error("special class σ_{a} outside 0..={max}")]
    SpecialOutOfRange { a: i64, max: u32 },

    #[error("shift amount {k} outside 0..={n}")]
    ShiftOutOfRange { k: u32, n: u32 },

    #[error("integer overflow in structure-constant arithmetic")]
    Overflow,

    #[error("invalid shift vector: {0}")]
    InvalidShiftVector(String),

    #[error("invalid invariant instance: {0}")]
    InvalidInstance(String),

    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("consistency check failed: {0}")]
    Inconsistency(String),
}

pub(crate) fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}
