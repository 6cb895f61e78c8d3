//! Crate-wide error type.

use std::fmt;

use crate::radii::Theorem;

#[derive(Debug)]
pub enum Error {
    /// A series constructor saw a NaN or infinite coefficient.
    NonFiniteCoefficient { index: usize },
    /// A series constructor saw an empty coefficient list.
    EmptySeries,
    /// Differentiation of an order-0 truncation.
    ConstantTruncation,
    /// A precondition on a plain parameter failed.
    Parameter(String),
    /// The requested theorem's hypotheses exclude these bounds; a sibling
    /// theorem covers the case. Never silently re-routed.
    WrongTheorem { requested: Theorem, suggested: Theorem },
    /// The gap function does not change sign on the solve bracket.
    NoRootInBracket { theorem: Theorem },
    /// An internal consistency check (e.g. the segment-integrator
    /// self-test) disagreed with its reference value.
    SelfCheck(String),
    Json(serde_json::Error),
    Io(std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFiniteCoefficient { index } => {
                write!(f, "series coefficient {index} is not finite")
            }
            Error::EmptySeries => write!(f, "series needs at least one coefficient"),
            Error::ConstantTruncation => {
                write!(f, "cannot differentiate constant-only truncation")
            }
            Error::Parameter(msg) => write!(f, "{msg}"),
            Error::WrongTheorem {
                requested,
                suggested,
            } => write!(
                f,
                "{requested} requires lambda1 > 1; use {suggested} for the lambda1 <= 1 case"
            ),
            Error::NoRootInBracket { theorem } => {
                write!(f, "no root in bracket for {theorem} (bounds admit no sign change)")
            }
            Error::SelfCheck(msg) => write!(f, "self-check failed: {msg}"),
            Error::Json(e) => write!(f, "json: {e}"),
            Error::Io(e) => write!(f, "io: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Json(e) => Some(e),
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e)
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}
