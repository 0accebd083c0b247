use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input word")]
    EmptyInput,

    #[error("empty pattern")]
    EmptyPattern,

    #[error("invalid letter {0:?}: expected 'a'..'z'")]
    InvalidLetter(char),

    #[error("letter '{letter}' is outside the declared alphabet of size {alphabet}")]
    LetterOutsideAlphabet { letter: char, alphabet: usize },

    #[error("'{affix}' is not a {kind} of '{word}'")]
    NotAnAffix {
        kind: &'static str,
        affix: String,
        word: String,
    },

    #[error("factor length {n} exceeds word length {len}")]
    FactorLengthTooLarge { n: usize, len: usize },

    #[error("invalid directive: {0}")]
    Parse(String),

    #[error("adjacent runs share letter '{letter}' at the {junction} junction")]
    AdjacentRuns { letter: char, junction: String },

    #[error("run exponent must be positive (run {run})")]
    ZeroExponent { run: usize },

    #[error("directive has a single-letter tail '{0}': the word is periodic and its z-factors never terminate")]
    SingleLetterTail(char),

    #[error("directive has no periodic tail; the word is finite")]
    FiniteDirective,

    #[error("letter '{0}' of the alphabet never occurs in the directive word")]
    MissingLetter(char),

    #[error("alphabet must contain at least two letters, got {0}")]
    AlphabetTooSmall(usize),

    #[error("index {index} is out of range: {what}")]
    OutOfRange { what: String, index: usize },

    #[error(
        "{what} {index} lies beyond the materialized horizon of '{spec}' (u up to n = {max_index})"
    )]
    BeyondHorizon {
        what: String,
        index: usize,
        spec: String,
        max_index: usize,
    },

    #[error("letter x_{0} does not occur earlier in the directive word")]
    FreshLetter(usize),

    #[error("expected a binary directive word, got alphabet of size {0}")]
    NotBinary(usize),

    #[error("closed form violated: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
