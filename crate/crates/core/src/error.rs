use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Caller supplied something outside an operation's precondition.
    #[error("input error: {0}")]
    Input(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A construction-time or audit-time contract was violated.
    #[error("invariant violated: {0}")]
    Invariant(String),

    /// The decoder reached a branch the case analysis rules out.
    #[error("encoding corruption: {0}")]
    Corruption(String),

    #[error("size limit exceeded: {0}")]
    Limit(String),

    #[error("generation failed: {0}")]
    Generation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub fn corruption(msg: impl Into<String>) -> Self {
        Error::Corruption(msg.into())
    }

    pub fn limit(msg: impl Into<String>) -> Self {
        Error::Limit(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    /// Prefixes the message, keeping the variant.
    pub fn context(self, what: &str) -> Self {
        match self {
            Error::Input(m) => Error::Input(format!("{what}: {m}")),
            Error::Parse { line, msg } => Error::Parse { line, msg: format!("{what}: {msg}") },
            Error::Invariant(m) => Error::Invariant(format!("{what}: {m}")),
            Error::Corruption(m) => Error::Corruption(format!("{what}: {m}")),
            Error::Limit(m) => Error::Limit(format!("{what}: {m}")),
            Error::Generation(m) => Error::Generation(format!("{what}: {m}")),
            Error::Io(e) => Error::Io(std::io::Error::new(e.kind(), format!("{what}: {e}"))),
        }
    }

    /// Process exit status: 2 for rejected input, 3 for a failed invariant or
    /// bound, 4 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Parse { .. } | Error::Limit(_) => 2,
            Error::Invariant(_) | Error::Corruption(_) | Error::Generation(_) => 3,
            Error::Io(_) => 4,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
