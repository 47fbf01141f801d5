use std::path::PathBuf;

use crate::circuit_text::CircuitParseError;
use crate::graph_file::GraphFileError;

/// Everything a command can fail with, mapped onto process exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    GraphFile(#[from] GraphFileError),

    #[error(transparent)]
    Circuit(#[from] CircuitParseError),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Domain(#[from] gqaoa_core::Error),
}

impl CliError {
    pub const EXIT_IO: i32 = 1;
    pub const EXIT_USAGE: i32 = 2;
    pub const EXIT_DOMAIN: i32 = 3;
    pub const EXIT_CAP: i32 = 4;

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::GraphFile(_) | CliError::Circuit(_) => Self::EXIT_USAGE,
            CliError::Io { .. } => Self::EXIT_IO,
            CliError::Domain(gqaoa_core::Error::CapReached { .. }) => Self::EXIT_CAP,
            CliError::Domain(gqaoa_core::Error::UnlistedParameters(_)) => Self::EXIT_USAGE,
            CliError::Domain(_) => Self::EXIT_DOMAIN,
        }
    }
}
