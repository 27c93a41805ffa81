use thiserror::Error;

/// Front-end failures, split by exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

impl From<bernstein_core::Error> for CliError {
    fn from(e: bernstein_core::Error) -> Self {
        match e {
            bernstein_core::Error::Internal(m) => CliError::Internal(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<ncgb::Error> for CliError {
    fn from(e: ncgb::Error) -> Self {
        match e {
            ncgb::Error::Internal(m) | ncgb::Error::Core(bernstein_core::Error::Internal(m)) => CliError::Internal(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
