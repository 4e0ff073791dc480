use thiserror::Error;

use crate::alphabet::Symbol;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must satisfy 2 <= q <= 65536, got {0}")]
    InvalidAlphabet(u32),

    #[error("symbol {symbol} is outside Z_{q}")]
    SymbolOutOfRange { symbol: u64, q: u32 },

    #[error("words and cycles must contain at least one symbol")]
    Empty,

    #[error("pattern does not occur in the cycle")]
    NotFound,

    #[error("gcd(beta, q) != 1 for beta={beta}, q={q}")]
    InvalidBeta { beta: Symbol, q: u32 },

    #[error("gcd(lambda, q) != 1 for lambda={lambda}, q={q}")]
    BadLambda { lambda: Symbol, q: u32 },

    #[error("word of length {len} is too short for a kernel of span {span}")]
    WordTooShort { len: usize, span: usize },

    #[error("kernel does not have property (D)")]
    NotPropertyD,

    #[error("base cycle repeats a window of length {0}")]
    NotVertexDisjoint(usize),

    #[error("{0} exceeds the enumeration guard")]
    TooLarge(String),

    #[error("alphabet size {0} is even: an external base cycle is required")]
    EvenAlphabetNeedsBase(u32),

    #[error("input is not a De Bruijn cycle of order {order} over Z_{q}")]
    NotDeBruijn { q: u32, order: usize },

    #[error("invalid parameters: {0}")]
    BadParameters(String),

    #[error("gamma must be nonzero")]
    GammaZero,

    #[error("no cross-join pair found between the two cycles")]
    NoPairFound,

    #[error("the pair words are not conjugates")]
    PairNotConjugate,

    #[error("the pair words do not lie on the two different cycles")]
    PairNotSplit,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
