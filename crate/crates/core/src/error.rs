use thiserror::Error;

/// Failure modes shared by every computation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The caller supplied something outside the operation's domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configured size limit (Weyl group cap, degree bound) would be exceeded.
    #[error("computation limit exceeded: {0}")]
    LimitExceeded(String),

    /// Checked 64-bit arithmetic overflowed.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// Two independent computations of the same quantity disagreed.
    #[error("identity violation: {0}")]
    IdentityViolation(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Short machine-readable tag used on the command line.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::LimitExceeded(_) => "limit-exceeded",
            Error::Overflow(_) => "overflow",
            Error::IdentityViolation(_) => "identity-violation",
        }
    }

    /// The message without its kind prefix.
    pub fn detail(&self) -> String {
        match self {
            Error::InvalidInput(m) | Error::LimitExceeded(m) | Error::IdentityViolation(m) => m.clone(),
            Error::Overflow(what) => format!("integer overflow in {what}"),
        }
    }

    /// Process exit code for this failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) => 1,
            Error::LimitExceeded(_) | Error::Overflow(_) => 2,
            Error::IdentityViolation(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn add(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub(crate) fn mul(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}
