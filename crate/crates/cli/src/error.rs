use std::fmt;
use std::io;

/// Failure classes, each with its own exit status.
#[derive(Debug)]
pub enum CliError {
    /// Methods or references disagree. Exit 1.
    Mismatch(String),
    /// Bad flags or parameters. Exit 2.
    Usage(String),
    /// Filesystem or network trouble. Exit 3.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Mismatch(m) | CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<rcomp_core::Error> for CliError {
    fn from(e: rcomp_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<rcomp_oeis::Error> for CliError {
    fn from(e: rcomp_oeis::Error) -> Self {
        use rcomp_oeis::Error as E;
        match e {
            E::InvalidId(_) | E::TooShort { .. } | E::Core(_) => CliError::Usage(e.to_string()),
            E::Ambiguous(_) => CliError::Mismatch(e.to_string()),
            _ => CliError::Io(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;
