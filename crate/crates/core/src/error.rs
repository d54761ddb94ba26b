use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by geometry, training and I/O routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point norm {norm} is not inside the open unit ball")]
    OutsideBall { norm: f64 },

    #[error("tangent vector is based at a different point")]
    BaseMismatch,

    #[error("hyperplane normal must have a positive norm")]
    ZeroNormal,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("binary training requires labels -1 and +1")]
    NonBinaryLabels,

    #[error("class {0} has no examples")]
    EmptyClass(i32),

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("mistake bound requires a positive ridge parameter")]
    BoundNotComputable,

    #[error(
        "rejection sampling accepted {accepted} of {attempted} draws; \
         the requested margin cannot be satisfied"
    )]
    UnsatisfiableConfig { accepted: u64, attempted: u64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
