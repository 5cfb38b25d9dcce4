use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("permutation length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("not a permutation of 0..{len}: {reason}")]
    InvalidPermutation { len: usize, reason: String },

    #[error("{what} requires length at least {min}, got {len}")]
    TooShort { what: &'static str, min: usize, len: usize },

    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("edit costs must be non-negative")]
    NegativeCost,

    #[error("cost must be non-negative, got {0}")]
    NegativeFitnessCost(f64),

    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(String),

    #[error("matrix is not symmetric: |a[{row}][{col}] - a[{col}][{row}]| exceeds tolerance")]
    Asymmetric { row: usize, col: usize },

    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("unknown distance measure `{0}`")]
    UnknownMeasure(String),

    #[error("unknown mutation operator `{0}`")]
    UnknownOperator(String),

    #[error("unknown landscape `{0}`")]
    UnknownLandscape(String),

    #[error("landscape `{0}` has no known optimal permutations")]
    NoOptima(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
