use thiserror::Error;

/// Errors produced by the field, matrix and code machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} outside supported range [2, 2^31 - 1]")]
    PrimeOutOfRange(u64),
    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("matrix not invertible")]
    Singular,
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("entry {value} out of range for GF({p})")]
    EntryOutOfRange { value: u64, p: u32 },
    #[error("order n = {0} unsupported (need 2 <= n <= 64)")]
    InvalidOrder(usize),
    #[error("eigenvalue scan needs p <= {limit}, got p = {p}; use comb_spectrum for combinatorial matrices")]
    ScanTooLarge { p: u32, limit: u32 },
    #[error("defective over GF({0}): eigenvectors do not span the space")]
    Defective(u32),
    #[error("{what}: work {work} exceeds guard {limit}")]
    GuardExceeded {
        what: &'static str,
        work: u128,
        limit: u128,
    },
    #[error("zero code has no minimum distance")]
    ZeroCode,
    #[error("conjugation transfer broke membership")]
    TransferBroke,
    #[error("t = {t} exceeds word length {len}")]
    TooManyErrors { t: usize, len: usize },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
