//! Error types shared across the crate.

use thiserror::Error;

/// Violation of one of the Cartan matrix axioms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("matrix is not square: {rows} rows, {cols} labels")]
    NotSquare { rows: usize, cols: usize },
    #[error("diagonal entry C[{i}][{i}] = {value}, expected 2")]
    DiagonalNotTwo { i: usize, value: i64 },
    #[error("off-diagonal entry C[{i}][{j}] = {value} is positive")]
    OffDiagonalPositive { i: usize, j: usize, value: i64 },
    #[error("zero pattern asymmetric: C[{i}][{j}] = 0 but C[{j}][{i}] != 0")]
    AsymmetricZero { i: usize, j: usize },
    #[error("symmetrizer d[{i}] = {value} is not positive")]
    SymmetrizerNotPositive { i: usize, value: i64 },
    #[error("not symmetrizable: d[{i}]*C[{i}][{j}] != d[{j}]*C[{j}][{i}]")]
    NotSymmetrizable { i: usize, j: usize },
    #[error("symmetrizers have gcd {gcd}, expected 1")]
    SymmetrizerGcd { gcd: i64 },
    #[error("symmetrizer list has length {got}, expected {expected}")]
    SymmetrizerLength { got: usize, expected: usize },
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("empty label list")]
    EmptyLabels,
    #[error("bad config line: {0}")]
    Config(String),
}

/// Parse failure with byte position in the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

/// Arithmetic-layer failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("series expansion undefined: denominator has no invertible lowest term")]
    SeriesUndefined,
    #[error("q-binomial index out of range: k = {k}, n = {n}")]
    BinomialRange { n: u32, k: u32 },
}

/// Errors from free-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("vertex index {vertex} out of range for rank {rank}")]
    VertexOutOfRange { vertex: usize, rank: usize },
    #[error("element is not supported on level {expected}: found letter at level {found}")]
    WrongLevel { expected: i64, found: i64 },
    #[error("element mixes levels: found {0} and {1}")]
    MixedLevels(i64, i64),
    #[error("serre element requires i != j")]
    SerreEqualVertices,
    #[error("operation requires a rank-1 Cartan matrix, got rank {0}")]
    NotRankOne(usize),
    #[error("boundary level {0} outside {{0,1}}")]
    LevelOutOfRange(i64),
}

/// Errors from Gram-matrix computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GramError {
    #[error("basis Gram block is singular")]
    SingularGram,
    #[error("target is not in the span of the basis modulo the kernel")]
    Inconsistent,
    #[error("word enumeration exceeds the configured limit: {count} > {limit}")]
    SizeGuard { count: usize, limit: usize },
}

/// Errors from KLR-algebra computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KlrError {
    #[error("invalid KLR parameters: {0}")]
    InvalidParams(String),
    #[error("weight mismatch between operands")]
    WeightMismatch,
    #[error("|alpha| = {got} exceeds the configured bound {bound}")]
    SizeGuard { got: usize, bound: usize },
    #[error("sequence length mismatch")]
    LengthMismatch,
}
