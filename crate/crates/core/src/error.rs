use thiserror::Error;

use crate::grid::{EdgeRef, TriRef};

/// Errors raised by the grid engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("triangle {tri} is outside a {n}-grid")]
    TriangleOutOfRange { tri: TriRef, n: usize },

    #[error("edge {edge} is not covered by this rule in a {n}-grid: {reason}")]
    EdgeOutOfRange {
        edge: EdgeRef,
        n: usize,
        reason: &'static str,
    },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("symmetry constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("no path between the requested vertices")]
    NoPath,

    #[error("work budget exceeded: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
