use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("the infinity tangle has no horizontal twist expansion")]
    InfinityInput,
    #[error("0/0 is not an extended rational")]
    Indeterminate,
    #[error("b({p},{q}) is not a 4-plat: gcd(p, q) > 1")]
    NonCoprime { p: i64, q: i64 },
    #[error("expression is not in two-summand normal form")]
    NormalFormRequired,
    #[error("parameter out of domain: {0}")]
    DomainError(String),
    #[error("diagram has {crossings} crossings, above the oracle limit of {limit}")]
    ScaleExceeded { crossings: usize, limit: usize },
    #[error("diagram still has open endpoints")]
    OpenDiagram,
    #[error("diagram is closed, expected a 4-ended tangle")]
    NotATangle,
    #[error("unsupported tangle: {0}")]
    UnsupportedTangle(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("arithmetic overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, TangleError>;
