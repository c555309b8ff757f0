use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {0} is outside the supported range")]
    DegreeOutOfRange(usize),

    #[error("{perm} is not an arc permutation")]
    NotArc { perm: String },

    #[error("{perm} is not unimodal")]
    NotUnimodal { perm: String },

    #[error("{perm} is not a non-unimodal arc permutation")]
    NotInZ { perm: String },

    #[error("tableau is not in T_n: {0}")]
    NotInT(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid psi code: {0}")]
    InvalidPsiCode(String),

    #[error("invalid descent word: {0}")]
    InvalidDescentWord(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("element not in poset: {0}")]
    UnknownElement(String),

    #[error("{lo} is not below {hi}")]
    NotComparable { lo: String, hi: String },

    #[error("non-integral value from closed form: {0}")]
    NonIntegral(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
}

pub type Result<T> = std::result::Result<T, Error>;
