use thiserror::Error;

/// Errors raised by the algebra kernel and the layers above it.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("no cached Groebner basis on ideal; run buchberger first")]
    MissingBasis,

    #[error("variable set error: {0}")]
    BadVariables(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("inconsistent presentation: {0}")]
    BadPresentation(String),

    #[error("saturation did not stabilize within {cap} rounds; presentation is likely malformed")]
    SaturationCap { cap: usize },

    #[error("defining ideal is not weight-homogeneous: {0}")]
    Inhomogeneous(String),

    #[error("invalid Kempf grading: {0}")]
    BadKempfGrading(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("truncation depth {depth} insufficient: {msg}")]
    InsufficientDepth { depth: usize, msg: String },

    #[error("module input is not grounded: {0}")]
    NotGrounded(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
