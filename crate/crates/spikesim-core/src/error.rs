//! Crate-wide error type.
//!
//! Errors split into two families, mirrored by the CLI's exit codes:
//! domain/configuration problems (bad values, violated invariants) and
//! I/O or parse problems (unreadable files, malformed records).

use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A value lies outside its documented domain.
    #[error("domain: {0}")]
    Domain(String),

    /// An argument is structurally invalid (zero steps, degenerate shape).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Two containers that must agree in shape do not.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Site or step index outside the valid range.
    #[error("out of bounds: {0}")]
    Bounds(String),

    /// A configuration violates one of its invariants.
    #[error("configuration: {0}")]
    Config(String),

    /// A physical quantity is missing and no override supplies it.
    /// `symbol` names the missing quantity (e.g. `E_hardware`).
    #[error("incomplete input: missing {symbol}; supply it in the run log or via an override")]
    IncompleteInput { symbol: String },

    /// Malformed structured input. `line` is 1-based; 0 means the location
    /// is the whole document.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn invalid_argument(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn bounds(msg: impl Into<String>) -> Self {
        Error::Bounds(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for errors caused by unreadable or malformed external input
    /// rather than by out-of-domain values. The CLI maps these to exit
    /// code 2 and everything else to exit code 1.
    pub fn is_io_or_parse(&self) -> bool {
        matches!(self, Error::Io(_) | Error::Parse { .. })
    }
}
