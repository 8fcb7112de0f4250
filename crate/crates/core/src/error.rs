use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by the zero function")]
    DivisionByZeroFunction,
    #[error("pole at z = {0}")]
    PoleAtPoint(String),
    #[error("not a root of {group}: {root:?}")]
    NotARoot { group: String, root: Vec<i64> },
    #[error("basis or size mismatch: {0}")]
    BasisMismatch(String),
    #[error("non-integral grading: {0}")]
    NonIntegralGrading(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("{0} has no outer involution")]
    NoOuterInvolution(String),
    #[error("shift is not in the lattice: {0}")]
    ShiftNotInLattice(String),
    #[error("xi is not fixed by the involution")]
    XiNotSigmaFixed,
    #[error("element is not in the positive chamber")]
    NotInPositiveChamber,
    #[error("element is not in the integer lattice")]
    NotInLattice,
    #[error("order violation: {0}")]
    OrderViolation(String),
    #[error("unsupported space: {0}")]
    UnsupportedSpace(String),
    #[error("gamma_xi is not single valued: {0}")]
    NotSingleValued(String),
    #[error("datum has coefficients of positive lambda degree")]
    NotSOneInvariant,
    #[error("loop is singular")]
    SingularLoop,
    #[error("fiber dimension {found} differs from {expected}")]
    FiberDimensionMismatch { expected: usize, found: usize },
    #[error("F(1) is singular")]
    BasepointSingular,
    #[error("schema: {0}")]
    Schema(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
