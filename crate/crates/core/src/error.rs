use thiserror::Error;

use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("expected an {expected} algebra, got a {found} one")]
    KindMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("table is not anticommutative: e{}e{} + e{}e{} has e{} coefficient {residual}", i + 1, j + 1, j + 1, i + 1, k + 1)]
    NotAnticommutative {
        i: usize,
        j: usize,
        k: usize,
        residual: Scalar,
    },

    #[error("invalid basis: {0}")]
    Basis(String),

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not invertible over the parameter ring: determinant {determinant} is not a unit; instantiate the parameters first")]
    NotInvertibleOverRing { determinant: Scalar },

    #[error("construction refused: {0}")]
    Refused(String),

    #[error("search space has {candidates} candidates, budget is {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },

    #[error("{path}: {message}")]
    Schema { path: String, message: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error in {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
