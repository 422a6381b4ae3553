use thiserror::Error;

use crate::model::ProblemSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("parse error in entry {entry}{}: {message}", .factor.map(|f| format!(", factor {f}")).unwrap_or_default())]
    Parse {
        /// 1-based entry number, or the header text when known.
        entry: String,
        /// 1-based factor index within the entry.
        factor: Option<usize>,
        message: String,
    },

    #[error("infeasible parameters for {spec}: {reason}")]
    Infeasible { spec: ProblemSpec, reason: String },

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("no base factorization available for {0}")]
    UnsupportedByAtlas(ProblemSpec),

    #[error("{0} is an open case")]
    UnknownOpen(ProblemSpec),

    #[error("search budget exhausted while generating {0}")]
    GenerationTimeout(String),

    #[error("cached entry {key} failed verification: {reason}")]
    CacheCorruption { key: String, reason: String },

    #[error("construction produced an invalid factorization: {0}")]
    Defect(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
