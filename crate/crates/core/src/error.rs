use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("root order must be at least 1")]
    ZeroOrder,
    #[error("mismatched root orders {0} and {1}")]
    OrderMismatch(u32, u32),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("cannot scale by a zero entry")]
    ZeroScale,
    #[error("invalid permutation of length {0}")]
    InvalidPermutation(usize),
    #[error("matrices with a formal variable have no standard form")]
    Symbolic,
    #[error("matrix is not a unit weighing matrix")]
    NotWeighing,
    #[error("invalid block: {0}")]
    InvalidBlock(String),
    #[error("invalid part: {0}")]
    InvalidPart(String),
    #[error("direct sum mixes weights {0} and {1}")]
    MixedWeights(usize, usize),
    #[error("more than one block carries the formal variable")]
    MultipleSymbolic,
    #[error("order {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}
