use thiserror::Error;

/// Errors produced by the transforms, the image pipeline and the file codecs.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed binary input; `offset` is the byte position where parsing stopped.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Malformed CSV input; `line` is 1-based.
    #[error("csv error at line {line}: {message}")]
    Csv { line: u64, message: String },

    /// Bad command-line usage.
    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
