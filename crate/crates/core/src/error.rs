use thiserror::Error;

/// Errors raised by the group, algebra and determinant routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("unknown catalog key `{0}`")]
    UnknownCatalogKey(String),
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("quotient group is not abelian")]
    QuotientNotAbelian,
    #[error("element is not supported on the subgroup")]
    NotSupportedOnSubgroup,
    #[error("invalid transversal: {0}")]
    InvalidTransversal(String),
    #[error("not a subgroup chain: {0}")]
    NotASubgroupChain(String),
    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("matrix size mismatch: {0}")]
    SizeMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("element is not invertible")]
    SingularElement,
    #[error("matrix is not invertible")]
    SingularMatrix,
    #[error("symbolic coefficients are not supported here")]
    SymbolicCoefficientsUnsupported,
    #[error("group order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("no irreducible degree fixture for `{0}`")]
    FixtureMissing(String),
    #[error("determinant strategies disagree: {0}")]
    StrategyMismatch(String),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
