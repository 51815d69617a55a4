use thiserror::Error;

use crate::color::ColorSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse color set {0:?}: letters must come from \"rbgoys\"")]
    ColorParse(String),
    #[error("color set {0} is not admissible")]
    NotAdmissible(ColorSet),
    #[error("no known product formula for color set {0}")]
    NoFormula(ColorSet),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not an order ideal: element {head} is present but its predecessor {tail} is not")]
    NotAnIdeal { tail: usize, head: usize },
    #[error("array violates {0}")]
    Violation(String),
    #[error("invalid {kind}: {reason}")]
    InvalidObject { kind: &'static str, reason: String },
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("unsupported conversion {from} -> {to}: {reason}")]
    Unsupported {
        from: String,
        to: String,
        reason: String,
    },
}

impl Error {
    pub fn invalid(kind: &'static str, reason: impl Into<String>) -> Error {
        Error::InvalidObject {
            kind,
            reason: reason.into(),
        }
    }
}
