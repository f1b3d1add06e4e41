use thiserror::Error;

/// Errors raised across the library.
///
/// Each variant maps onto one of the CLI exit classes: `Bounds`, `Structural`,
/// `Degenerate` and `Parse` are domain errors, `Resource` is a guard trip and
/// `Io` is a filesystem failure.
#[derive(Debug, Error)]
pub enum Error {
    /// A scalar argument fell outside its admissible range.
    #[error("{what} = {value} out of range (allowed {allowed})")]
    Bounds {
        what: &'static str,
        value: i64,
        allowed: String,
    },

    /// Shapes or dimensions of two objects disagree.
    #[error("structural mismatch: {0}")]
    Structural(String),

    /// Input that makes the requested operation meaningless.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A memory or size guard rejected the request.
    #[error("resource guard: {0}")]
    Resource(String),

    /// Malformed circuit or program text.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn bounds(what: &'static str, value: impl TryInto<i64>, allowed: impl Into<String>) -> Self {
        Error::Bounds {
            what,
            value: value.try_into().unwrap_or(i64::MAX),
            allowed: allowed.into(),
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
