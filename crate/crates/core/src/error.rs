use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("qubit count {n} outside supported range 1..={max}")]
    QubitCount { n: usize, max: usize },
    #[error("expected {expected} hex digits, found {found}")]
    HexLength { expected: usize, found: usize },
    #[error("invalid hex digit {0:?}")]
    HexDigit(char),
    #[error("basis label {x} out of range for {n} qubits")]
    BasisLabel { x: usize, n: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("duplicate edge {0}")]
    DuplicateEdge(String),
    #[error("vertex {vertex} out of range 1..={n}")]
    Vertex { vertex: usize, n: usize },
    #[error("empty edge")]
    EmptyEdge,
    #[error("uniform order {k} outside 1..={n}")]
    UniformOrder { k: usize, n: usize },
    #[error("count 2^{exponent} is too large to print exactly")]
    CountTooLarge { exponent: String },
    #[error("dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },
    #[error("table is not normalized: f(0) = 1 (factor out the global sign first)")]
    NotNormalized,
    #[error("matrix is not Hermitian (deviation {0:e})")]
    NonHermitian(f64),
    #[error("invalid bipartition subset {0}")]
    Subset(String),
    #[error("state is not real equally weighted")]
    NotEquallyWeighted,
    #[error("state is not normalized (norm^2 = {0})")]
    Norm(f64),
}
