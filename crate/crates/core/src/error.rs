use thiserror::Error;

/// Errors raised by the geometric primitives, the fiber solvers and the suite runner.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cannot normalize a zero vector (norm {norm:e})")]
    ZeroVector { norm: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("quaternion is not unit (norm {norm})")]
    NonUnitQuaternion { norm: f64 },
    #[error("all quadratic coefficients are zero")]
    AllZero,
    #[error("degenerate fiber: {0}")]
    DegenerateFiber(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid tolerance `{name}` = {value}: must be strictly positive")]
    InvalidTolerance { name: &'static str, value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
