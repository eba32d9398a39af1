use std::path::PathBuf;

use toric_codes_core::Error as CoreError;

/// Errors of the driver layer, each mapped to a process exit status.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    /// Malformed input: code files, order specs, pattern files, corpus names.
    #[error("{0}")]
    Parse(String),

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl AppError {
    /// 2 for unusable input, 3 for exhausted budgets, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Io { .. } | AppError::Parse(_) => 2,
            AppError::Core(e) if e.is_resource() || matches!(e, CoreError::Overflow(_)) => 3,
            AppError::Core(CoreError::Inconsistent(_)) | AppError::Json(_) => 1,
            AppError::Core(_) => 2,
        }
    }
}

pub type AppResult<T> = Result<T, AppError>;
