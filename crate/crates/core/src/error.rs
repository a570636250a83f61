use thiserror::Error;

use crate::liealg::Weight;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported algebra `{0}` (expected one of A1, A2, C2, G2)")]
    UnsupportedAlgebra(String),

    #[error("grid density M = {0} is invalid; M must be at least 1")]
    InvalidM(i64),

    #[error("label {0} is not dominant")]
    NonDominantLabel(Weight),

    #[error("label {0} is not strictly dominant")]
    NonStrictlyDominantLabel(Weight),

    #[error("torus point carries no exact rational coordinates")]
    InexactPoint,

    #[error("finite-difference step {0:e} outside [1e-7, 1e-4]")]
    StepOutOfRange(f64),

    #[error("subdivision count R = {got} is below the minimum {min}")]
    SubdivisionTooCoarse { got: usize, min: usize },

    #[error("rank mismatch: algebra has rank {expected}, argument has {got} coordinates")]
    RankMismatch { expected: usize, got: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
