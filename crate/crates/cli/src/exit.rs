use std::fmt;
use std::process::ExitCode;

/// Everything that ends a run early, tagged with its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, unreadable or malformed input: exit 2.
    Input(String),
    /// A cap or node budget was hit: exit 3.
    Resource(String),
}

impl Failure {
    pub fn input(msg: impl Into<String>) -> Self {
        Failure::Input(msg.into())
    }

    pub fn code(&self) -> ExitCode {
        match self {
            Failure::Input(_) => ExitCode::from(2),
            Failure::Resource(_) => ExitCode::from(3),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Resource(m) => f.write_str(m),
        }
    }
}

impl From<stdom::Error> for Failure {
    fn from(e: stdom::Error) -> Self {
        if e.is_resource() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(format!("i/o error: {e}"))
    }
}

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    /// Some audit failed: exit 1.
    AuditFailed,
}

impl Verdict {
    pub fn from_failures(failures: usize) -> Self {
        if failures == 0 {
            Verdict::Ok
        } else {
            Verdict::AuditFailed
        }
    }

    pub fn code(self) -> ExitCode {
        match self {
            Verdict::Ok => ExitCode::SUCCESS,
            Verdict::AuditFailed => ExitCode::from(1),
        }
    }
}
