use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet has {0} symbols; at most 64 are supported")]
    AlphabetTooLarge(usize),
    #[error("unknown symbol {symbol:?} in forbidden word {word:?}")]
    UnknownSymbol { symbol: String, word: String },
    #[error("forbidden word {word:?} has length {len}, exceeding the cap of {cap}")]
    ForbiddenTooLong { word: String, len: usize, cap: usize },
    #[error("forbidden words must be nonempty")]
    EmptyForbiddenWord,
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("{what} exceeds work cap: {needed} > {cap}")]
    CapExceeded { what: &'static str, needed: String, cap: String },
    #[error("the shift has empty language")]
    EmptyLanguage,
    #[error("invalid model parameters: {0}")]
    InvalidModel(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("model file: {0}")]
    ModelFile(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, needed: impl ToString, cap: impl ToString) -> Self {
        Error::CapExceeded { what, needed: needed.to_string(), cap: cap.to_string() }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
