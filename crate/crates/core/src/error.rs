use thiserror::Error;

use crate::solver::FeasibilityReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("dimension mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },

    #[error("index {index} out of range 1..={len}")]
    Index { index: usize, len: usize },

    #[error("inputs are not orthogonal: |<u|v>| = {residual:e}")]
    NotOrthogonal { residual: f64 },

    #[error("model infeasible: {0}")]
    Infeasible(Box<FeasibilityReport<f64>>),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("field fit failed: {0}")]
    Fit(String),

    #[error("render failed: {0}")]
    Render(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
