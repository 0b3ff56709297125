use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("fields of characteristic 2 are not supported")]
    Char2Field,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("operator is singular")]
    SingularOperator,
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("unsupported characteristic {0}: {1}")]
    UnsupportedCharacteristic(u64, &'static str),
    #[error("search budget exceeded: {0}")]
    SearchBudgetExceeded(String),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("algebra is not simple: {0}")]
    NonSimple(String),
    #[error("algebra has nil-rank 3: {0}")]
    NilRank3(String),
    #[error("no square root of {0} in the ground field")]
    SquareRootUnavailable(String),
    #[error("nil elements are linearly dependent")]
    DependentNils,
    #[error("algebra has no unit")]
    NotUnital,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: duplicate entry for product ({i}, {j}, {k})")]
    DuplicateEntry {
        line: usize,
        i: usize,
        j: usize,
        k: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
