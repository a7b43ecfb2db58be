use std::path::{Path, PathBuf};

use thiserror::Error;

/// Broad classes of failure; the CLI maps each onto an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parameter,
    Domain,
    Capability,
    Decode,
    Config,
    Io,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("capability exceeded: {0}")]
    Capability(String),
    #[error("decode error at bit {position}: {reason}")]
    Decode { position: usize, reason: String },
    #[error("config error: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{}: {source}", path.display())]
    File { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parameter(_) => ErrorKind::Parameter,
            Error::Domain(_) => ErrorKind::Domain,
            Error::Capability(_) => ErrorKind::Capability,
            Error::Decode { .. } => ErrorKind::Decode,
            Error::Config(_) => ErrorKind::Config,
            Error::Parse(_) | Error::Json(_) => ErrorKind::Parameter,
            Error::Io(_) | Error::File { .. } | Error::Csv(_) => ErrorKind::Io,
        }
    }

    /// For `map_err`: an I/O failure on `path`, keeping the path in the message.
    pub fn file(path: &Path) -> impl FnOnce(std::io::Error) -> Self + '_ {
        move |source| Error::File { path: path.to_path_buf(), source }
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
