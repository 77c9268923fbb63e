use thiserror::Error;

/// Errors produced by subcopula construction and measurement.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Domain levels do not form a valid grid (must be strictly increasing
    /// from 0 to 1 with at least two levels).
    #[error("invalid grid domain: {0}")]
    InvalidDomain(String),

    /// Value matrix shape does not match the domain sizes. This is a
    /// structural defect, reported separately from axiom violations.
    #[error("dimension mismatch: value matrix is {rows}x{cols} but domains are {d1}x{d2}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        d1: usize,
        d2: usize,
    },

    /// The matrix is well-formed but violates the subcopula axioms.
    #[error("subcopula fails validation: {violations} violation(s), first: {first}")]
    InvalidSubcopula { violations: usize, first: String },

    /// No observations remain after the missing-data policy.
    #[error("empty sample: no complete observation pairs")]
    EmptySample,

    /// Sample too large for the exact integer count arithmetic.
    #[error("sample size {0} exceeds the supported maximum of 10^9 pairs")]
    SampleTooLarge(usize),

    /// Parametric model constraint violated.
    #[error("invalid model: {0}")]
    InvalidModel(String),

    /// A copula evaluator returned a value outside [0, 1] or a non-finite value.
    #[error("copula evaluator returned {value} at ({u}, {v})")]
    EvaluatorRange { u: f64, v: f64, value: f64 },

    /// A statistic is undefined for the given sample (e.g. Pearson's r for a
    /// constant variable).
    #[error("statistic unavailable: {0}")]
    Unavailable(String),

    /// Mismatched or insufficient columns for a pairwise computation.
    #[error("invalid columns: {0}")]
    InvalidColumns(String),
}

pub type Result<T> = std::result::Result<T, Error>;
