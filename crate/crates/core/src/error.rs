use thiserror::Error;

/// Errors produced by the compression core.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid precision {0}: must be between 9 and 16 bits")]
    InvalidPrecision(u8),

    #[error("payload truncated: needed byte {offset} of {available}")]
    TruncatedPayload { offset: usize, available: usize },

    #[error("coder already finalized")]
    AlreadyFinalized,

    #[error("window of length {len} exceeds context capacity {capacity}")]
    WindowOverflow { len: usize, capacity: usize },

    #[error("invalid window spec: overlap {overlap} must be smaller than context {context}")]
    InvalidWindowSpec { context: usize, overlap: usize },

    #[error("invalid model config: {0}")]
    InvalidConfig(String),

    #[error("checkpoint malformed: {0}")]
    BadCheckpoint(String),

    #[error("checkpoint does not match expected model: {0}")]
    ModelMismatch(String),

    #[error("non-finite loss at step {step}{}", position.map(|p| format!(" (stream offset {p})")).unwrap_or_default())]
    NonFiniteLoss { step: u64, position: Option<usize> },

    #[error("container malformed at offset {offset}: {reason}")]
    BadContainer { offset: usize, reason: String },

    #[error("content checksum mismatch after decode")]
    ChecksumMismatch,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
