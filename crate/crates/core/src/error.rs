use thiserror::Error;

use crate::signed::CaseLabel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("permutation must have at least one letter")]
    Empty,
    #[error("letter {0} appears more than once")]
    Duplicate(usize),
    #[error("letter {value} is outside 1..={n}")]
    OutOfRange { value: usize, n: usize },
    #[error("cannot parse {0:?} as a positive integer")]
    Parse(String),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("transposition index {index} is outside 1..{n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("ground set must be strictly ascending")]
    GroundNotAscending,
}

/// A map was applied outside the first-letter class it is defined on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{map} is defined on class {expected}, but the input is in class {found}")]
pub struct DomainError {
    pub map: &'static str,
    pub expected: CaseLabel,
    pub found: CaseLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("n = {n} is outside the supported range 1..={max}")]
    SizeOutOfRange { n: usize, max: usize },
    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),
    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),
    #[error("at most {max} statistics can be combined, got {got}")]
    TooManyStatistics { got: usize, max: usize },
    #[error("no statistics given")]
    NoStatistics,
}
