use thiserror::Error;

use crate::splitting::ValidationReport;

pub type Result<T, E = GutsError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GutsError {
    #[error("cone order < 2 (got {0})")]
    ConeOrderTooSmall(i64),
    #[error("cone order {value} exceeds the configured maximum {cap}")]
    ConeOrderAboveCap { value: i64, cap: u32 },
    #[error("label cap {0} is outside 2..=1000000")]
    InvalidLabelCap(u32),
    #[error("expected {expected} cone labels, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("side configuration rejected: {0}")]
    InvalidSide(ValidationReport),
    #[error("side is an orbifold rational tangle, so the splitting surface is compressible")]
    CompressibleSide,
    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),
    #[error("side boundary {found} does not match the splitting surface {expected}")]
    SurfaceMismatch { expected: String, found: String },
    #[error("side has nonempty guts (contribution {0}·V8)")]
    NotEmptyGuts(String),
    #[error("label mismatch under gluing: expected {expected}, found {found}")]
    LabelMismatch { expected: String, found: String },
    #[error("series did not converge within {0} terms")]
    NonConvergence(usize),
    #[error("tolerance must be positive and finite")]
    InvalidTolerance,
    #[error("angle must be finite")]
    NonFiniteAngle,
    #[error("invalid tangle word token {0:?}")]
    InvalidWordToken(String),
}
