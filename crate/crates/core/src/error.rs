use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("iteration {t} outside the valid range for this schedule (M = {max})")]
    IterationOutOfRange { t: usize, max: usize },

    #[error("unknown dataset `{name}`; valid names: {valid}")]
    UnknownDataset { name: String, valid: String },

    #[error("unknown model `{name}`; valid names: {valid}")]
    UnknownModel { name: String, valid: String },

    #[error("brute-force grid limited to {max} dimensions, got {actual}")]
    GridTooLarge { max: usize, actual: usize },

    #[error("need at least {required} recast runs, got {actual}")]
    InsufficientEvidence { required: usize, actual: usize },

    #[error(
        "negated Hessian is not positive definite: {negative} non-positive eigenvalue(s), smallest {min_eigenvalue:e}"
    )]
    IndefiniteHessian { negative: usize, min_eigenvalue: f64 },

    #[error("negated Hessian is numerically singular (condition {condition:e})")]
    SingularHessian { condition: f64 },

    #[error("objective is not finite in the finite-difference neighbourhood of parameter {index}")]
    NonFiniteNeighbourhood { index: usize },

    #[error("{path}: row {row}: {message}")]
    Parse { path: PathBuf, row: usize, message: String },

    #[error("incompatible result file: schema_version {found}, expected {expected}")]
    SchemaVersion { found: u64, expected: u64 },

    #[error("result file holds `{found}`, expected `{expected}`")]
    WrongKind { found: String, expected: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
