use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum ExitCode {
    Success = 0,
    Usage = 1,
    Io = 2,
    Constraint = 3,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot parse {path}: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Constraint(String),
    #[error(transparent)]
    Core(#[from] entsplit_core::Error),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Self::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> ExitCode {
        use entsplit_core::Error as E;
        match self {
            Self::Usage(_) | Self::Parse { .. } => ExitCode::Usage,
            Self::Io { .. } => ExitCode::Io,
            Self::Constraint(_) => ExitCode::Constraint,
            // broken invariants downstream of valid input
            Self::Core(
                E::ConstraintViolation { .. }
                | E::NotWerner(_)
                | E::ClosedFormMismatch(_)
                | E::NegativeEigenvalue(_)
                | E::ComplexEigenvalue(_)
                | E::NoConvergence,
            ) => ExitCode::Constraint,
            Self::Core(_) => ExitCode::Usage,
        }
    }
}
