use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid length for {label}: {value} (must be finite and strictly positive)")]
    InvalidLength { label: &'static str, value: f64 },

    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(String),

    #[error("degenerate angle: {0}")]
    DegenerateAngle(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("{stage}: residual does not change sign over [{lo}, {hi}]")]
    BracketFailure { stage: &'static str, lo: f64, hi: f64 },

    #[error("{stage}: no convergence after {iterations} iterations (best residual {best_residual:e})")]
    NoConvergence {
        stage: &'static str,
        best_residual: f64,
        iterations: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
