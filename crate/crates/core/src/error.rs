use thiserror::Error;

/// Errors raised by the oscillator library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported operator symbol `{0}`")]
    UnknownOperator(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("not a contraction: alpha = {alpha} is below the spectral norm {norm}")]
    Contraction { alpha: f64, norm: f64 },

    #[error("lowering to resolution {target} discards occupied levels (lost norm {lost_norm})")]
    Truncation { target: usize, lost_norm: f64 },

    #[error("terminating 2F1 has a pole: numerator order {n} exceeds denominator order {order}")]
    Pole { n: u64, order: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
