use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0} is not an odd prime below 2^31")]
    NotPrime(u64),
    #[error("line {line}: generator is not homogeneous: term {term} has degree {degree}, expected {expected}")]
    Inhomogeneous {
        line: usize,
        term: String,
        degree: u32,
        expected: u32,
    },
    #[error("line {line}: generator is zero")]
    ZeroGenerator { line: usize },
    #[error("no such file or fixture: {0}")]
    UnknownInput(String),
    #[error("{0}")]
    Usage(String),
    #[error("timed out after {0} s")]
    Timeout(u64),
    #[error(transparent)]
    Core(#[from] csmcalc::Error),
}

impl CliError {
    /// Process exit code: 2 parse, 3 precondition, 4 retries exhausted, 5 timeout.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Syntax { .. }
            | CliError::NotPrime(_)
            | CliError::Inhomogeneous { .. }
            | CliError::UnknownInput(_)
            | CliError::Usage(_) => 2,
            CliError::ZeroGenerator { .. } => 3,
            CliError::Timeout(_) => 5,
            CliError::Core(csmcalc::Error::RetriesExhausted(_)) => 4,
            CliError::Core(_) => 3,
        }
    }
}
