use thiserror::Error;

/// Errors raised by construction and verification routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension D = {0} is out of range (need {1})")]
    DimensionOutOfRange(usize, &'static str),

    #[error("vertex {0} is not in the vertex set of the {1}")]
    InvalidVertex(String, &'static str),

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// An exact identity that should hold failed to hold.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Returns a [`Error::Verification`] from the enclosing function unless `cond` holds.
#[macro_export]
macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Verification(format!($($arg)+)));
        }
    };
}
