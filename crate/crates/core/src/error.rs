use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    InvalidPermutation(String),
    #[error("generator index {index} outside 1..={n}")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("variable index {index} outside the family of size {m}")]
    VariableOutOfRange { index: usize, m: usize },
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("factorizations of different kinds cannot be summed")]
    MixedKinds,
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("partition {0:?} is not strict")]
    NotStrict(Vec<usize>),
    #[error("polynomial is not symmetric in the requested family")]
    NotSymmetric,
    #[error("omega needs at least {needed} variables per family, have {available}")]
    TooFewVariables { needed: usize, available: usize },
    #[error("insertion invariant violated: {0}")]
    Insertion(String),
    #[error("invalid quadruple: {0}")]
    InvalidQuadruple(String),
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
