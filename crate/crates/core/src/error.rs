use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("leading coefficient is not a unit")]
    NonUnitLeadingCoefficient,
    #[error("operation not supported over {0}")]
    UnsupportedRing(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("group of order {order} exceeds the bound {bound}")]
    GroupTooLarge { order: u64, bound: u64 },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("group mismatch")]
    GroupMismatch,
    #[error("validation failed: {0}")]
    ValidationFailed(String),
    #[error("determinant is not a unit")]
    NonUnitDeterminant,
    #[error("not a point of the curve")]
    NotAPoint,
    #[error("illegal substitution: f(image)^{truncation} != 0 (vanishing power: {vanishing:?})")]
    IllegalSubstitution { truncation: usize, vanishing: Option<usize> },
    #[error("precision {requested} exceeds truncation {truncation}")]
    PrecisionExceeded { requested: usize, truncation: usize },
    #[error("base ring mismatch")]
    BaseMismatch,
    #[error("divisor is not contained")]
    NotContained,
    #[error("basis cutoff {given} is below the vanishing index {needed}")]
    CutoffTooSmall { given: usize, needed: usize },
    #[error("coefficient is not nilpotent within the exponent bound")]
    NotNilpotent,
    #[error("openness failed: f^M is not divisible by the generator for M <= {0}")]
    OpennessFailed(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("denominator is not monic")]
    NonMonicDenominator,
    #[error("polynomial does not divide")]
    NotDivisible,
    #[error("exact division failed: {0}")]
    ExactDivisionFailed(String),
    #[error("unsupported model: {0}")]
    UnsupportedModel(String),
    #[error("group order is not invertible in the base ring")]
    NotInvertibleOrder,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("expression error: {0}")]
    Expr(String),
}

pub type Result<T> = std::result::Result<T, Error>;
