use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("the zero polynomial has no leading word")]
    ZeroPolynomial,

    #[error("relation {0} is not monic under the given order")]
    NonMonic(usize),

    #[error("relation set is not closed under composition")]
    NotClosed,

    #[error("word admits no elimination step")]
    NoElimination,

    #[error("empty word not allowed here")]
    EmptyWord,

    #[error("not an associative Lyndon-Shirshov word: {0}")]
    NotAlsw(String),

    #[error("not a Lie element: residual leading word {0} is not an ALSW")]
    NotLieElement(String),

    #[error("designated subword does not occur at the given position")]
    SubwordMismatch,

    #[error("ambiguity does not fit the given pair of relations")]
    InvalidAmbiguity,

    #[error("companion-set enumeration for {0} exceeded the exponent bound {1}")]
    InfiniteCompanionSet(String, u32),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
