use thiserror::Error;

use crate::element::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for type {family} (minimum {minimum})")]
    InvalidRank {
        family: String,
        rank: usize,
        minimum: usize,
    },

    #[error("generator index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("word {0} is not reduced")]
    NotReduced(Word),

    #[error("{0}")]
    MoveNotApplicable(String),

    #[error("resource budget exceeded while processing {element}: {what} (limit {limit})")]
    Budget {
        element: String,
        what: &'static str,
        limit: usize,
    },

    #[error("element {0} is not freely braided")]
    NotFreelyBraided(Word),

    #[error("element {0} is not content maximal")]
    NotContentMaximal(Word),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("graph file line {line}: {message}")]
    GraphFormat { line: usize, message: String },

    #[error("{0}")]
    Invalid(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
