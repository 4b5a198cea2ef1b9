use alloc::string::String;

use crate::csys::Point;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("duplicate point {0}")]
    DuplicatePoint(Point),
    #[error("point set is not a staircase: {point} is present but {missing} is not")]
    NotStaircase { point: Point, missing: Point },
    #[error("multiplicity of {0} must be positive")]
    ZeroMultiplicity(Point),
    #[error("no multiplicity given for {0}")]
    MissingMultiplicity(Point),
    #[error("multiplicity given for {0}, which is not in the point set")]
    UnknownPoint(Point),
    #[error("system length {ell} is smaller than the number of points {r}")]
    LengthTooSmall { ell: usize, r: usize },
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("representative choice invalid: {0}")]
    BadRepresentatives(String),
    #[error("result is not integral")]
    NotIntegral,
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
}
