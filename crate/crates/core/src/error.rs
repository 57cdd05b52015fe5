//! Crate-wide error type for the few fallible operations.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unsupported Laguerre parameter nu = {nu}; only nu in {{0, 1}} (dimensions 2 and 4) are exact here")]
    UnsupportedNu { nu: usize },

    #[error("permutation enumeration over n = {n} elements exceeds the ceiling {ceiling}")]
    EnumerationCeiling { n: usize, ceiling: usize },

    #[error("matrix is not doubly stochastic within {tolerance}: {detail}")]
    NotDoublyStochastic { tolerance: f64, detail: String },

    #[error("contraction lemma requires mu = n * min entry > 0, got {mu}")]
    NonPositiveMu { mu: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("coefficient file {path}: {detail}")]
    CoeffFile { path: PathBuf, detail: String },

    #[error("writing {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
