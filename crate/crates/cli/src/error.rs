use epslab_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Compute(CoreError),
    #[error("hypothesis violated: {0}")]
    Hypothesis(CoreError),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0} check(s) failed")]
    ChecksFailed(usize),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::HypothesisViolation { .. } => CliError::Hypothesis(e),
            other => CliError::Compute(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 1,
            CliError::Compute(_) | CliError::Io { .. } => 2,
            CliError::Hypothesis(_) => 3,
            CliError::ChecksFailed(_) => 4,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
