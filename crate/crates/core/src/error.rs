use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("degenerate substitution")]
    DegenerateSubstitution,
    #[error("indeterminate count")]
    IndeterminateCount,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("empty interval: lower bound must be below upper bound")]
    EmptyInterval,
    #[error("parameter out of domain: {0}")]
    ParameterOutOfDomain(String),
    #[error("not a simple set: {0}")]
    NotSimpleSet(String),
    #[error("degree hypothesis violated: deg(g_{order}) = {degree} > {order}")]
    DegreeHypothesis { order: usize, degree: usize },
    #[error("no operator form: {0}")]
    NoOperatorForm(String),
    #[error("counterexample requires negative alpha")]
    NonNegativeAlpha,
    #[error("q must have degree >= 1")]
    ConstantQ,
    #[error("q must have only real zeros")]
    QNotRealRooted,
    #[error("alpha must be non-negative")]
    NegativeAlpha,
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
