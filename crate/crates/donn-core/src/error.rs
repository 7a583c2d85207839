//! Error type shared by all simulator modules.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("grid too small: need at least 2x2, got {0}x{0}")]
    GridTooSmall(usize),

    #[error("non-square grid: {rows}x{cols}")]
    NonSquareGrid { rows: usize, cols: usize },

    #[error("non-finite values in {0}")]
    NonFinite(&'static str),

    #[error("shape mismatch in {context}: expected {expected}, got {actual}")]
    ShapeMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("wavelength mismatch between field and transfer function")]
    WavelengthMismatch,

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("invalid rotation configuration: {0}")]
    InvalidRotation(String),

    #[error("unknown task index {0}")]
    UnknownTask(usize),

    #[error("detector layout does not fit the field: {0}")]
    LayoutMismatch(String),

    #[error("target is not a one-hot vector")]
    NotOneHot,

    #[error("empty dataset")]
    EmptyDataset,

    #[error("degenerate input image: zero total power cannot be normalized")]
    ZeroPowerImage,

    #[error("dataset error: {0}")]
    Dataset(String),

    #[error("idx error: {0}")]
    Idx(#[from] IdxError),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// Constructor used by the numeric guards sprinkled through training.
    pub fn non_finite(context: &'static str) -> Self {
        Error::NonFinite(context)
    }

    pub fn invalid_parameter(name: &'static str, reason: impl Into<String>) -> Self {
        Self::invalid(name, reason)
    }
}

/// Parse failures for the IDX container format.
#[derive(Debug, Error)]
pub enum IdxError {
    #[error("bad magic: first two bytes must be zero, got {0:#04x} {1:#04x}")]
    BadMagic(u8, u8),

    #[error("unsupported dtype code {0:#04x} (only 0x08 unsigned byte is supported)")]
    UnsupportedDtype(u8),

    #[error("truncated file: expected {expected} payload bytes, got {actual}")]
    Truncated { expected: usize, actual: usize },

    #[error("truncated header")]
    TruncatedHeader,

    #[error("unreasonable rank {0}")]
    BadRank(u8),
}
