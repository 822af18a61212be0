use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("atom `{0}` has no value in the valuation")]
    UnboundAtom(String),

    #[error("{resource} limit exceeded: {requested} > {cap}")]
    CapExceeded { resource: &'static str, requested: usize, cap: usize },

    #[error("invalid agenda: {0}")]
    InvalidAgenda(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn cap(resource: &'static str, requested: usize, cap: usize) -> Self {
        Error::CapExceeded { resource, requested, cap }
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
