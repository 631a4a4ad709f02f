//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by the library.
///
/// Variants are grouped by what the caller did wrong: structural mistakes
/// (dimensions, malformed input), domain violations (a precondition on the
/// mathematical input failed), unsupported requests, and resource caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two objects that must share a dimension do not.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch {
        /// The dimension required by the context.
        expected: usize,
        /// The dimension actually supplied.
        found: usize,
    },
    /// Parameters of a family, group or enumeration are out of range.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// A mathematical precondition on the input failed.
    #[error("domain error: {0}")]
    Domain(String),
    /// The requested operation is not available for this group family.
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    /// Text or JSON input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A desk-scale size cap would be exceeded.
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    /// A reference data record is unknown or malformed.
    #[error("reference data: {0}")]
    Golden(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
