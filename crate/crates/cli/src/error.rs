use std::fmt;

use invol_core::Error;

/// Process exit status. The numeric values are part of the interface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExitStatus {
    Involution = 0,
    PermutationOnly = 1,
    NotPermutation = 2,
    Precondition = 3,
    Input = 4,
    Mismatch = 5,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn label(self) -> &'static str {
        match self {
            ExitStatus::Involution => "involution",
            ExitStatus::PermutationOnly => "permutation, not an involution",
            ExitStatus::NotPermutation => "not a permutation",
            ExitStatus::Precondition => "precondition failure",
            ExitStatus::Input => "input error",
            ExitStatus::Mismatch => "criterion/oracle mismatch",
        }
    }
}

impl serde::Serialize for ExitStatus {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// A failed command: the library error plus the exit status it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub status: ExitStatus,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { status: ExitStatus::Input, message: message.into() }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        CliError { status: ExitStatus::Precondition, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotPrime(_)
            | Error::NotIrreducible(_)
            | Error::BadModulus(_)
            | Error::Overflow { .. }
            | Error::ElementOutOfRange(_)
            | Error::UnknownFamily(_)
            | Error::Parse { .. } => ExitStatus::Input,
            Error::Internal(_) => ExitStatus::Mismatch,
            _ => ExitStatus::Precondition,
        };
        CliError { status, message: e.to_string() }
    }
}

pub type CliResult<T> = Result<T, CliError>;
