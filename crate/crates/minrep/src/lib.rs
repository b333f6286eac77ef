//! Verification suites over `minrep-core`, with configuration, seeded
//! trials and report emission.

pub mod config;
pub mod report;
pub mod suites;
pub mod trials;

pub use config::RunConfig;
pub use report::{emit_report, SuiteReport};
pub use suites::run;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RunError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => 2,
            RunError::Internal(_) | RunError::Io(_) => 3,
        }
    }

    pub(crate) fn internal(e: impl std::fmt::Display) -> Self {
        RunError::Internal(e.to_string())
    }
}
