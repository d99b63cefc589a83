use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("unsupported conductor {0}")]
    InvalidConductor(u32),
    #[error("pole at specialization: denominator {denominator} vanishes{}", .at.as_ref().map(|m| format!(" in coefficient of {m}")).unwrap_or_default())]
    PoleAtSpecialization { denominator: String, at: Option<String> },
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("not divisible: remainder {0}")]
    NotDivisible(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not an eigenvector: {0}")]
    NotEigenvector(String),
    #[error("non-unique eigenfunction: {0}")]
    NonUniqueEigenfunction(String),
    #[error("path inconsistency at tableau {0}")]
    PathInconsistency(String),
    #[error("cost gate exceeded: {needed} > budget {budget}")]
    CostGateExceeded { needed: usize, budget: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable layout mismatch: {0}")]
    LayoutMismatch(String),
    #[error("cache error: {0}")]
    Cache(String),
}
