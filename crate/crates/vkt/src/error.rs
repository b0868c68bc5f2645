use std::io;

/// Failures of a CLI run, split by exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(#[from] vkt_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Json(#[from] crate::json::JsonError),
    #[error("{0}")]
    Usage(String),
    /// A check ran to completion and found a violation. The report has
    /// already been written.
    #[error("{0}")]
    Violation(String),
}

impl CliError {
    pub fn io(path: &str, source: io::Error) -> Self {
        CliError::Io { path: path.to_string(), source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
