//! Error types shared across the crate.

use std::fmt;

use thiserror::Error;

/// A syntax error with the byte offset it occurred at and the token kinds
/// that would have been accepted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at offset {}: found {}, expected {}",
            self.position,
            self.found,
            self.expected.join(" or ")
        )
    }
}

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0}")]
    Parse(ParseError),

    #[error("{what} exceeds the configured cap: {actual} > {limit}")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("set accessibility is undefined for the empty set")]
    EmptySet,

    #[error("cut is undefined for `{0}`: its degree of accessibility is 0")]
    UndeterminedSentence(String),

    #[error("evidence `{0}` is self-contradictory")]
    InconsistentEvidence(String),

    #[error("belief base is inconsistent")]
    InconsistentBase,

    #[error("invalid accessibility ranking: {0}")]
    InvalidRanking(String),

    #[error("evidence `{0}` is already believed; no context-requiring goal exists")]
    AlreadyBelieved(String),

    #[error("goal `{0}` is already believed")]
    GoalAlreadyBelieved(String),

    #[error("goal `{goal}` is not derivable from the base revised with `{evidence}`")]
    NoGoalDerivation { goal: String, evidence: String },

    #[error("no candidate contexts to select from")]
    EmptyCandidates,

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("desideratum must list at least one basic goal")]
    EmptyDesideratum,

    #[error("revision step {step} failed: {source}")]
    SequenceStep {
        step: usize,
        #[source]
        source: Box<Error>,
    },
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}
