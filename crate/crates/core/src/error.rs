use thiserror::Error;

/// Errors raised by the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial is not palindromic")]
    NotPalindromic,
    #[error("polynomial has odd degree")]
    OddDegree,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is not irreducible over the rationals")]
    NotIrreducible,
    #[error("constant term is not a unit (|f(0)| != 1)")]
    NotUnitConstant,
    #[error("degree too small: need at least {required}, got {actual}")]
    DegreeTooSmall { required: usize, actual: usize },
    #[error("polynomial is not a quartic")]
    NotQuartic,
    #[error("expected a monic palindromic octic")]
    NotPalindromicOctic,
    #[error("hypotheses H1 and H2 do not both hold (h1={h1}, h2={h2})")]
    PreconditionH1H2 { h1: bool, h2: bool },
    #[error("root index {index} out of range for {len} roots")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("update matrix is singular (det A = 0)")]
    SingularLoop,
    #[error("sequence is not reversible")]
    NotReversible,
    #[error("sequence is not degenerate")]
    NotDegenerate,
    #[error("dominance precondition failed: {0}")]
    PreconditionDominance(String),
    #[error("initial value count {inits} does not match recurrence length {rec}")]
    ArityMismatch { rec: usize, inits: usize },
    #[error("trailing recurrence coefficient a_0 is zero")]
    ZeroTrailingCoefficient,
    #[error("empty recurrence")]
    EmptyRecurrence,
    #[error("operation cancelled")]
    Cancelled,
    #[error("precision cap reached: {0}")]
    PrecisionExhausted(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
