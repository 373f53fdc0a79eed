use thiserror::Error;

/// Errors produced by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient rings differ: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("element {0} is not invertible")]
    NotInvertible(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable set: {0}")]
    InvalidVarSet(String),
    #[error("variable sets differ")]
    VarSetMismatch,
    #[error("expected {expected} images, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },
    #[error("operation requires field coefficients, ring is {0}")]
    NonFieldCoefficients(String),
    #[error("Groebner computation exceeded degree bound {0}")]
    DegreeBoundExceeded(u32),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("monomial-deletion strategy requires monomial relations; `{0}` is not a monomial")]
    NonMonomialRelations(String),
    #[error("map is not well defined: relation `{0}` maps to `{1}`")]
    IllDefinedMap(String, String),
    #[error("element does not belong to the map's domain")]
    ParentMismatch,
    #[error("maps are not composable")]
    CompositionMismatch,
    #[error("maps do not share domain and codomain")]
    DomainMismatch,
    #[error("maps {i} and {j} are not neighbours: {witness}")]
    NotNeighbours { i: usize, j: usize, witness: String },
    #[error("coefficients sum to {0}, not 1")]
    CoefficientsNotAffine(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not in D~(p,n): {0}")]
    NotInDtilde(String),
    #[error("element is not in the kernel of multiplication: m(t) = {0}")]
    NotInKernel(String),
    #[error("variable name `{0}` collides with tensor renaming")]
    NameCollision(String),
    #[error("unknown report format `{0}`")]
    UnknownFormat(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("self-verification failed: {0}")]
    VerificationFailed(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
