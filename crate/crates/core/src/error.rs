use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system {family}{rank}: admitted types are A_n (n>=1), D_n (n>=4), E6, E7, E8 and B2")]
    UnsupportedType { family: char, rank: usize },

    #[error("cannot parse root system identifier {0:?}")]
    BadTypeName(String),

    #[error("{0:?} is not a root of this system")]
    NotARoot(Vec<i64>),

    #[error("simple index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("enumeration of {what} exceeded cap {cap} after {produced} elements")]
    EnumerationTooLarge {
        what: String,
        produced: usize,
        cap: usize,
    },

    #[error(
        "element is not a minimal coset representative: it sends alpha_{alpha} to a negative root"
    )]
    NotMinimalRepresentative { alpha: usize },

    #[error("omega_{index} is not minuscule in {ctype}")]
    NotMinuscule { ctype: String, index: usize },

    #[error("word {word:?} is not reduced (element has length {length})")]
    NonReducedWord { word: Vec<usize>, length: usize },

    #[error("target {index} is not admissible for {ctype}: {reason}")]
    Inadmissible {
        ctype: String,
        index: usize,
        reason: String,
    },

    #[error("invalid argument: {0}")]
    BadArgument(String),

    #[error("unknown lemma suite {0:?}")]
    UnknownSuite(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
