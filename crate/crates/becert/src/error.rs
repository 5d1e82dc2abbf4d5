//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix is not Hermitian: max asymmetry {asymmetry:e} exceeds {tol:e}")]
    NotHermitian { asymmetry: f64, tol: f64 },

    #[error("matrix is not positive semidefinite: min eigenvalue {0:e}")]
    NotPsd(f64),

    #[error("trace is {0}, expected 1")]
    BadTrace(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("numerical error: {0}")]
    Numerical(String),

    #[error("certification target {target:e} is above the local branch maximum {max:e}")]
    OutOfBranch { target: f64, max: f64 },

    #[error("window empty: {0}")]
    WindowEmpty(String),

    #[error("sampler gave up after {rejections} rejections: {detail}")]
    Sampler { rejections: usize, detail: String },

    #[error("scenario error: {0}")]
    Scenario(String),

    #[error("model is not secular: worst eigenoperator residual {0:e}")]
    NonSecular(f64),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
