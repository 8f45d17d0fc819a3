use thiserror::Error;

/// Everything that can go wrong in this crate, grouped by who is at fault.
///
/// The grouping drives the CLI exit code: malformed input, a precondition the
/// input does not meet, or a disagreement between two routes that are
/// supposed to compute the same number.
#[derive(Debug, Error)]
pub enum Error {
    /// The input could not be parsed or failed validation.
    #[error("invalid input: {0}")]
    Input(String),

    /// The multiplication table is not associative.
    #[error("table is not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },

    /// Enumeration from generators produced more elements than allowed.
    #[error("enumeration exceeded the element cap of {cap}")]
    TooLarge { cap: usize },

    /// The input is well formed but the requested operation does not apply to it.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two independent computations disagree, or a count that must be a
    /// nonnegative integer is not one.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::NotAssociative { .. } | Error::TooLarge { .. } => 1,
            Error::Io(_) | Error::Json(_) => 1,
            Error::Precondition(_) => 2,
            Error::Internal(_) => 3,
        }
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
