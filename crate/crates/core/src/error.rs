use thiserror::Error;

/// Errors reported by the enumeration engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("cannot parse {what} from {text:?}: {reason}")]
    Parse {
        what: &'static str,
        text: String,
        reason: String,
    },

    #[error("length {n} exceeds the exhaustive-search ceiling {guard}")]
    GuardExceeded { n: usize, guard: usize },

    #[error("no positive root below t = {horizon}")]
    NoRoot { horizon: f64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
