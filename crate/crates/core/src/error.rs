use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Validation(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what} exceeds the cap of {cap}")]
    Cap { what: String, cap: usize },

    /// The branch-and-bound node budget ran out. `lower` and `upper` are the
    /// bounds on the domination number that were established before stopping.
    #[error("node budget of {budget} exhausted; gamma in [{lower}, {upper}]")]
    Budget {
        budget: u64,
        lower: usize,
        upper: usize,
    },

    #[error("unknown {kind} `{id}`")]
    Lookup { kind: &'static str, id: String },
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    /// True for the errors that mean "ran out of room", as opposed to bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Cap { .. } | Error::Budget { .. })
    }
}
