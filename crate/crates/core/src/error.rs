use thiserror::Error;

use crate::regularity::RegularityReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unbounded class: empty basis defines all permutations, never slot-bounded")]
    EmptyBasis,

    #[error("invalid letter {letter}: configuration has {slots} slot(s)")]
    InvalidLetter { letter: String, slots: usize },

    #[error("invalid word: letter {letter} at position {position} does not apply ({slots} slot(s) available)")]
    InvalidWord {
        position: usize,
        letter: String,
        slots: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("insertion encoding is not regular for this basis")]
    NotRegular(Box<RegularityReport>),

    #[error("resource guard `{guard}` exceeded (limit {limit})")]
    Guard { guard: &'static str, limit: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial division is not exact over the integers")]
    InexactDivision,

    #[error("not a power series: denominator has zero constant term")]
    NotPowerSeries,

    #[error("malformed automaton: {0}")]
    Automaton(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
