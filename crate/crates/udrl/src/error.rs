//! User-facing error type.
//!
//! Contract violations inside the numeric core (shape mismatches, indices out
//! of range, stepping a terminal state) are programmer errors and panic via
//! `assert!`. This type covers everything reachable from user input: configs,
//! checkpoints, and file IO.

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown preset `{0}` (expected `bandit-paper` or `cartpole-paper`)")]
    UnknownPreset(String),

    #[error("unknown config key `{key}` in {source_name}")]
    UnknownConfigKey { key: String, source_name: String },

    #[error("invalid value for config key `{key}`: {message}")]
    InvalidConfigValue { key: String, message: String },

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("malformed config line `{line}` in {source_name} (expected `key = value`)")]
    MalformedConfigLine { line: String, source_name: String },

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("checkpoint is for env `{found}`, but `{expected}` is required")]
    EnvMismatch { expected: String, found: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
