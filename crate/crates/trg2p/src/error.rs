//! Error types shared across the engine.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum G2pError {
    #[error("unknown grapheme '{0}'")]
    UnknownGrapheme(char),
    #[error("empty token after normalization")]
    EmptyToken,
    #[error("no vowel in left context for metaphoneme {0}")]
    MissingHarmonyContext(char),
    #[error("no vowel in phone sequence")]
    NoVowel,
    #[error("unresolved soft-g placeholder in '{0}'")]
    UnresolvedSoftG(String),
    #[error("unknown phoneme symbol '{0}'")]
    UnknownPhoneme(String),
    #[error("missing lexicon file {0}")]
    MissingFile(String),
    #[error("{file}:{line}: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },
}

impl G2pError {
    /// Stable machine-readable code used in batch error records.
    pub fn code(&self) -> &'static str {
        match self {
            G2pError::UnknownGrapheme(_) => "UnknownGrapheme",
            G2pError::EmptyToken => "EmptyToken",
            G2pError::MissingHarmonyContext(_) => "MissingHarmonyContext",
            G2pError::NoVowel => "NoVowel",
            G2pError::UnresolvedSoftG(_) => "UnresolvedSoftG",
            G2pError::UnknownPhoneme(_) => "UnknownPhoneme",
            G2pError::MissingFile(_) => "MissingFile",
            G2pError::Parse { .. } => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, G2pError>;
