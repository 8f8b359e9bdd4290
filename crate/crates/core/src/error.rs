use thiserror::Error;

/// Errors raised by the library. Each variant is either an input-validation
/// failure or a resource/budget refusal; see [`Error::is_budget`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { expected: usize, got: usize },

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },

    #[error("rank table has {got} entries, expected 2^{p} = {expected}")]
    RankTableLength {
        p: usize,
        expected: usize,
        got: usize,
    },

    #[error("ground set size {p} exceeds the supported maximum of {max}")]
    GroundSetTooLarge { p: usize, max: usize },

    #[error("invalid rank function: {0}")]
    InvalidRank(String),

    #[error("support points have mixed weights {first} and {other}")]
    WeightMismatch { first: u64, other: u64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("diagram cell ({row}, {col}) outside [{p}]x[{p}]")]
    CellOutOfRange { row: usize, col: usize, p: usize },

    #[error("invalid grading: {0}")]
    InvalidGrading(String),

    #[error("generator {divisor} divides generator {multiple}; generator list is not minimal")]
    NonMinimalGenerators { divisor: usize, multiple: usize },

    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),

    #[error("invalid field specification: {0}")]
    InvalidField(String),

    #[error("ragged vectors: expected length {expected}, got {got}")]
    RaggedVectors { expected: usize, got: usize },

    #[error("cannot parse {what}: {text}")]
    Parse { what: &'static str, text: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported dimension {d}; at most {max} is supported")]
    UnsupportedDimension { d: usize, max: usize },

    #[error("enumeration budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("dimension computation refused: {0}")]
    DimensionRefused(String),
}

impl Error {
    /// True for refusals caused by size limits rather than malformed input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedDimension { .. }
                | Error::BudgetExceeded { .. }
                | Error::DimensionRefused(_)
                | Error::GroundSetTooLarge { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
