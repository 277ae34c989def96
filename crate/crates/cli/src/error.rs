use pcmtie::PcmError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("cannot read input: {0}")]
    Io(String),
    #[error("invalid matrix: {0}")]
    Validation(#[from] PcmError),
    #[error("invalid names: {0}")]
    Names(String),
    #[error("bad arguments: {0}")]
    BadArgs(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Io(_) => 2,
            CliError::Validation(_) | CliError::Names(_) => 3,
            CliError::BadArgs(_) => 4,
        }
    }
}
