use thiserror::Error;

use crate::scalar::Scalar;

/// Errors produced by the analysis layers.
///
/// `NotApplicable` is a distinct outcome rather than a silent `false`: when a
/// perturbation is at least as large as the lower equivalence constant, the
/// sandwich bounds make no claim at all.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("singular matrix: column {dependent_col} depends on the preceding columns")]
    SingularMatrix { dependent_col: usize },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("length mismatch: {left} vectors on the left, {right} on the right")]
    LengthMismatch { left: usize, right: usize },

    #[error("dimension {n} exceeds the cap {cap} ({work}); raise the cap explicitly to proceed")]
    DimensionTooLarge { n: usize, cap: usize, work: String },

    #[error("basis is not normalized: vector {index} has l1 norm {norm}")]
    NotNormalized { index: usize, norm: Scalar },

    #[error("perturbation radius {radius} is not smaller than the lower constant {k}; the bounds do not apply")]
    NotApplicable { radius: Box<Scalar>, k: Box<Scalar> },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("generation failed: {attempts} consecutive singular draws")]
    GenerationFailed { attempts: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
