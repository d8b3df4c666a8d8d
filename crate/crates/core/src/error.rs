use thiserror::Error;

use crate::words::Word;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet declaration has no symbols")]
    EmptyAlphabet,
    #[error("symbol `{0}` declared twice")]
    DuplicateSymbol(String),
    #[error("`{0}` is not a valid symbol (letters, digits and `_`, not starting with a digit)")]
    InvalidSymbol(String),
    #[error("unknown symbol `{symbol}` at offset {position}")]
    UnknownSymbol { symbol: String, position: usize },
    #[error("letter rank {letter} is outside an alphabet of {size} letters")]
    LetterOutOfRange { letter: u16, size: usize },
    #[error("the empty word is not allowed here")]
    EmptyWord,
    #[error("{0:?} is not an associative Lyndon-Shirshov word")]
    NotAlsw(Word),
    #[error("a single letter has no standard split")]
    SingleLetter,
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("not a Lie element: leading word {0:?} is not an associative Lyndon-Shirshov word")]
    NotLieElement(Word),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid occurrence: {0}")]
    InvalidOccurrence(String),
    #[error("rule is not monic: leading coefficient is {0}")]
    NotMonic(String),
    #[error("commutation graph cannot contain the loop ({0}, {0})")]
    SelfLoop(String),
    #[error("reduction step word {step:?} is not below the bound {bound:?}")]
    BoundViolated { step: Word, bound: Word },
    #[error("clique series gives a non-integral dimension in degree {0}")]
    NonIntegralDimension(usize),
    #[error("parse error at offset {position}: {message}")]
    Parse { message: String, position: usize },
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(message: impl Into<String>, position: usize) -> Self {
        Error::Parse {
            message: message.into(),
            position,
        }
    }
}
