use thiserror::Error;

use crate::perm::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed permutation literal {input:?}: {reason}")]
    MalformedLiteral { input: String, reason: String },

    #[error("letter {0} appears more than once")]
    DuplicateLetter(Letter),

    #[error("letters must be positive integers")]
    NonPositiveLetter,

    #[error("a cyclic permutation needs at least one letter")]
    EmptyCycle,

    #[error("letter {0} does not occur in the permutation")]
    MissingLetter(Letter),

    #[error("operands are not disjoint: letter {0} occurs in both")]
    NotDisjoint(Letter),

    #[error("largest letter {max} lies in the second operand; swap the operands")]
    Orientation { max: Letter },

    #[error("{0} is not a cyclic shuffle of the pair")]
    NotACyclicShuffle(String),

    #[error("word {word} is not a shuffle for anchor {anchor}")]
    NotAShuffle { word: String, anchor: Letter },

    #[error("invalid statistics: {0}")]
    InvalidParameters(String),

    #[error("zero denominator in closed form for (m={m}, n={n}, r={r}, s={s})")]
    ZeroDenominator { m: i64, n: i64, r: i64, s: i64 },

    #[error("closed form is not integral: {numerator}/{denominator}")]
    NonIntegral { numerator: i128, denominator: i128 },

    #[error("{what}: requested {requested}, limit is {limit}")]
    ResourceGuard {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
