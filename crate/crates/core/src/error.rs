//! Error taxonomy shared by every engine.
//!
//! The split matters to callers: `Input` is malformed data, `Precondition`
//! is well-formed data outside an operation's mathematical domain, `Budget`
//! is a brute-force refusal, and `Internal` signals that a runtime
//! self-check failed (an implementation bug, never a user mistake).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("oracle budget exceeded: {0}")]
    Budget(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn budget(msg: impl Into<String>) -> Self {
        Error::Budget(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
