use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input: exit code 2.
    #[error("{field}: {message}")]
    Parse { field: String, message: String },
    /// Well-formed input that fails a mathematical precondition: exit code 3.
    #[error("{0}")]
    Precondition(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn parse(field: &str, message: impl std::fmt::Display) -> Self {
        CliError::Parse {
            field: field.to_string(),
            message: message.to_string(),
        }
    }

    pub fn precondition(message: impl std::fmt::Display) -> Self {
        CliError::Precondition(message.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Precondition(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}
