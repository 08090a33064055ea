use thiserror::Error;

use crate::exprio::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index ({row},{col}) out of range for n = {n}")]
    IndexOutOfRange { row: usize, col: usize, n: usize },

    #[error("ambient size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("cannot specialize q to zero")]
    ZeroSpecialization,

    #[error("negative exponent {0}")]
    NegativeExponent(i64),

    #[error("index sets must be non-empty and of equal size (got {rows} rows, {cols} cols)")]
    MinorShape { rows: usize, cols: usize },

    #[error("invalid index set {elements:?} for n = {n}")]
    InvalidIndexSet { elements: Vec<usize>, n: usize },

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("index {index} is not a member of {set:?}")]
    NotMember { index: usize, set: Vec<usize> },

    #[error("{what} = {value} is out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("ambient size must be at least 1")]
    EmptyAmbient,

    #[error("time budget exceeded")]
    BudgetExceeded,

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
