use std::io;

use thiserror::Error;

/// Failures surfaced to the user, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] fracspec_core::Error),
}

impl CliError {
    pub const EXIT_CHECK_FAILED: i32 = 1;
    pub const EXIT_CONFIG: i32 = 2;
    pub const EXIT_IO: i32 = 3;

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) | Self::Core(_) => Self::EXIT_CONFIG,
            Self::Io(_) => Self::EXIT_IO,
        }
    }

    pub(crate) fn io(context: impl std::fmt::Display, err: impl std::fmt::Display) -> Self {
        Self::Io(format!("{context}: {err}"))
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Self::Io(e.to_string())
    }
}
