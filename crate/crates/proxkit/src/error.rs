use std::path::PathBuf;

/// Input problems. Every variant maps to exit status 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {message}", path.display())]
    Io { path: PathBuf, message: String },
    #[error("{}:{line}:{column}: {message}", path.display())]
    Parse { path: PathBuf, line: usize, column: usize, message: String },
    #[error("{}: {message}", path.display())]
    Invalid { path: PathBuf, message: String },
    #[error("size limit: {0}")]
    Size(String),
    #[error("{0}")]
    Usage(String),
}
