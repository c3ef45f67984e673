use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol `{0}` is declared more than once")]
    DuplicateSymbol(String),
    #[error("`{0}` is not a usable symbol name")]
    InvalidSymbol(String),
    #[error("minimal polynomial is not monic in the algebraic generator")]
    NonMonicMinimalPolynomial,
    #[error("minimal polynomial must have degree at least 2, got {0}")]
    MinimalPolynomialDegree(usize),
    #[error("minimal polynomial coefficients may only involve the transcendentals")]
    ForeignMinimalPolynomialCoefficient,
    #[error("minimal polynomial is not separable")]
    InseparableMinimalPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero polynomial has no squarefree decomposition")]
    ZeroPolynomial,
    #[error("squarefree decomposition does not match the denominator")]
    MismatchedDecomposition,
    #[error("not a unit of the dual numbers: the epsilon-free part is zero")]
    NonUnit,
    #[error("invalid place: {0}")]
    InvalidPlace(String),
    #[error("invalid polar data: {0}")]
    InvalidPolarData(String),
    #[error("places {0} and {1} share a point")]
    OverlappingPlaces(String, String),
    #[error("values belong to different towers")]
    TowerMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
