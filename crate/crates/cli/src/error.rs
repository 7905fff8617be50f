use std::fmt::Display;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad arguments or unusable input files.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] toricrep::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Output(String),
}

impl CliError {
    pub fn usage(e: impl Display) -> Self {
        CliError::Usage(e.to_string())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) | CliError::Io(_) | CliError::Output(_) => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
