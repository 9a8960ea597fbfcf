use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid index: {0}")]
    Index(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("partition {0} does not fit in the {1}x{1} box")]
    OutOfBox(String, usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("subspace is not Lagrangian")]
    NotLagrangian,
    #[error("expected charge 0, found {0}")]
    Charge(i64),
    #[error("series undefined: tau has zero constant term")]
    SeriesUndefined,
    #[error("truncation {have} too small, need at least {need}")]
    TruncationTooSmall { need: usize, have: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("evaluation failed: {0}")]
    Evaluation(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
