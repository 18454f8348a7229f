use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31 - 1]")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed quiver: {0}")]
    MalformedQuiver(String),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("algebra is not finite dimensional below degree cap {0}")]
    NotFiniteDimensional(usize),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid module map: {0}")]
    InvalidMap(String),
    #[error("module is not projective")]
    NotProjective,
    #[error("randomized search exhausted its budget of {0} attempts")]
    BudgetExhausted(usize),
    #[error("algebra is not self-injective")]
    NotSelfInjective,
    #[error("structure map is not a monomorphism")]
    NotMono,
    #[error("algebra is not Gorenstein within cap {0}")]
    NotGorensteinWithinCap(usize),
    #[error("module is not Gorenstein projective")]
    NotGorensteinProjective,
    #[error("algebra is not 1-Gorenstein (d = {0:?})")]
    NotOneGorenstein(Option<usize>),
    #[error("module has no finite projective dimension within cap {0}")]
    InfiniteProjectiveDimension(usize),
    #[error("object is not locally projective")]
    NotLocallyProjective,
    #[error("enumeration cap exceeded: {0}")]
    EnumerationCapExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Errors caused by inputs that violate an operation's precondition.
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::Internal(_) | Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
