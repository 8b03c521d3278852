use thiserror::Error;

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CONFIG: i32 = 1;
    pub const CONTRACT: i32 = 2;
    pub const BUDGET: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Contract(String),

    #[error("{0}")]
    Budget(String),

    #[error(transparent)]
    Core(#[from] absperm::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Parse { .. } | CliError::Io { .. } => exit::CONFIG,
            CliError::Contract(_) => exit::CONTRACT,
            CliError::Budget(_) => exit::BUDGET,
            CliError::Core(e) => match e {
                absperm::Error::Contract(_) | absperm::Error::Numerical(_) => exit::CONTRACT,
                absperm::Error::RetryBudgetExhausted(_) => exit::BUDGET,
                _ => exit::CONFIG,
            },
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}
