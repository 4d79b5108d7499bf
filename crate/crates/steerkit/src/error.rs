use thiserror::Error;

/// Errors produced across the library.
#[derive(Debug, Error)]
pub enum SteerError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("group mismatch: expected {expected}, got {got}")]
    GroupMismatch { expected: String, got: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("bad magic bytes: expected {expected:?}, found {found:?}")]
    BadMagic { expected: [u8; 4], found: [u8; 4] },

    #[error("unsupported format version {found} (expected {expected})")]
    BadVersion { expected: u16, found: u16 },

    #[error("truncated payload: expected {expected} bytes, got {actual}")]
    Truncated { expected: usize, actual: usize },

    #[error("count mismatch between {left_name} ({left}) and {right_name} ({right})")]
    CountMismatch {
        left_name: String,
        left: usize,
        right_name: String,
        right: usize,
    },

    #[error("config error in field `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("non-finite value in {layer}: {message}")]
    Numeric { layer: String, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, SteerError>;

impl SteerError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        SteerError::InvalidArgument(msg.into())
    }
}
