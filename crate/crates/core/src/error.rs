use thiserror::Error;

/// Errors raised by path, tree and series operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("m must be at least 1")]
    InvalidM,
    #[error("prefix condition fails at index {index}: partial sum {sum} exceeds {bound}")]
    PrefixViolation { index: usize, sum: usize, bound: usize },
    #[error("levels sum to {sum}, expected {expected}")]
    WrongTotal { sum: usize, expected: usize },
    #[error("graft position {index} exceeds last level {last}")]
    GraftOutOfRange { index: usize, last: usize },
    #[error("operands have different m ({left} and {right})")]
    MismatchedM { left: usize, right: usize },
    #[error("product index {index} exceeds m = {m}")]
    IndexOutOfRange { index: usize, m: usize },
    #[error("wedge decomposition needs {expected} entries, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("wedge entry {entry} cannot be grafted")]
    InvalidWedge { entry: usize },
    #[error("down step {0} is not followed by an up step")]
    NotRotatable(usize),
    #[error("down step {0} does not exist")]
    NoSuchStep(usize),
    #[error("paths have different sizes ({left} and {right})")]
    MismatchedSize { left: usize, right: usize },
    #[error("tree is not in the requested basis")]
    NotInBasis,
    #[error("cut does not belong to the path")]
    InvalidCut,
    #[error("cuts overlap")]
    OverlappingCuts,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
