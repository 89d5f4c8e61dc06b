use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    InvalidEdge(usize),
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{0} vertices requested, at most 64 are supported")]
    TooManyVertices(usize),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invalid family parameter: {0}")]
    InvalidFamilyParameter(String),
    #[error("graph has no vertices, so no D-ladder exists")]
    EmptyGraphNoLadder,
    #[error("polynomial is not divisible by (1 - t): value at t = 1 is {0}")]
    NotDivisible(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("subset is not contained in the complement of the chosen leaf set")]
    InvalidSubset,
    #[error("subset enumeration over {size} vertices exceeds the cap of {cap}")]
    SubsetBudgetExceeded { size: usize, cap: usize },
    #[error("graph on {n} vertices exceeds the budget of {cap} vertices")]
    BudgetExceeded { n: usize, cap: usize },
    #[error("Cameron-Walker decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("homology engine calibration failed: {0}")]
    CalibrationFailed(String),
}
