use std::fmt;

/// Failure classes, each mapped to a distinct CLI exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    /// Malformed input or a violated precondition.
    Input,
    /// A configured resource budget (pairs, degree, steps) was exhausted.
    Budget,
    /// A theorem check failed on a concrete instance.
    Verification,
    /// An internal invariant broke; always a bug.
    Internal,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Input => 1,
            ErrorKind::Budget => 2,
            ErrorKind::Verification | ErrorKind::Internal => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ErrorKind::Input => "input",
            ErrorKind::Budget => "budget",
            ErrorKind::Verification => "verification",
            ErrorKind::Internal => "internal",
        }
    }
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{kind} error [{reason}]: {message}")]
pub struct Error {
    pub kind: ErrorKind,
    /// Stable machine-readable tag, e.g. `inhomogeneous_column`.
    pub reason: &'static str,
    pub message: String,
}

impl Error {
    pub fn new(kind: ErrorKind, reason: &'static str, message: impl Into<String>) -> Self {
        Error { kind, reason, message: message.into() }
    }

    pub fn input(reason: &'static str, message: impl Into<String>) -> Self {
        Self::new(ErrorKind::Input, reason, message)
    }

    pub fn budget(reason: &'static str, message: impl Into<String>) -> Self {
        Self::new(ErrorKind::Budget, reason, message)
    }

    pub fn verification(reason: &'static str, message: impl Into<String>) -> Self {
        Self::new(ErrorKind::Verification, reason, message)
    }

    pub fn internal(reason: &'static str, message: impl Into<String>) -> Self {
        Self::new(ErrorKind::Internal, reason, message)
    }

    pub fn exit_code(&self) -> i32 {
        self.kind.exit_code()
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
