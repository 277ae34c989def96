use thiserror::Error;

/// Errors raised by the library.
///
/// Indices are stored 0-based; the `Display` output renders them 1-based so
/// messages match the conventional `a_ij` notation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PcmError {
    #[error("matrix is not square: {rows} rows but row {} has {cols} entries", .row + 1)]
    NotSquare { rows: usize, row: usize, cols: usize },

    #[error("a comparison matrix needs at least 2 alternatives, got {0}")]
    TooSmall(usize),

    #[error("entry ({}, {}) is not a finite number", .row + 1, .col + 1)]
    NonFinite { row: usize, col: usize },

    #[error("entry ({}, {}) = {value} is not strictly positive", .row + 1, .col + 1)]
    NonPositiveEntry { row: usize, col: usize, value: f64 },

    #[error(
        "reciprocity violated at ({}, {}): m_ij * m_ji - 1 = {residual:e}",
        .row + 1, .col + 1
    )]
    ReciprocityViolation { row: usize, col: usize, residual: f64 },

    #[error(
        "antisymmetry violated at ({}, {}): a_ij + a_ji = {residual:e}",
        .row + 1, .col + 1
    )]
    AntisymmetryViolation { row: usize, col: usize, residual: f64 },

    #[error("entry ({}, {}) overflows the exponential map", .row + 1, .col + 1)]
    Overflow { row: usize, col: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("weight {} = {value} is not strictly positive", .index + 1)]
    NonPositiveWeight { index: usize, value: f64 },

    #[error("invalid alternative pair ({}, {}) for n = {n}", .i + 1, .j + 1)]
    InvalidPair { i: usize, j: usize, n: usize },

    #[error("generator {kind} parameter out of range for this pair")]
    ParamOutOfRange { kind: &'static str },

    #[error(
        "pair ({}, {}) has j = n = {n}; relabel before building the tie basis",
        .i + 1, .j + 1
    )]
    PairRequiresRelabeling { i: usize, j: usize, n: usize },

    #[error("basis element {} has squared norm {norm_sq:e}; basis is degenerate", .index + 1)]
    DegenerateBasis { index: usize, norm_sq: f64 },

    #[error("winner {} is not a member of the pair ({}, {})", .winner + 1, .i + 1, .j + 1)]
    InvalidWinner { winner: usize, i: usize, j: usize },

    #[error("delta must be strictly positive, got {0}")]
    NonPositiveDelta(f64),

    #[error("tolerance `{name}` must be strictly positive, got {value}")]
    InvalidTolerance { name: &'static str, value: f64 },

    #[error("linear system is singular")]
    SingularSystem,
}

pub type Result<T, E = PcmError> = std::result::Result<T, E>;
