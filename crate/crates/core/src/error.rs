use thiserror::Error;

use crate::incidence::{DesarguesClause, PappusClause};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("field order {p}^{k} is outside the supported range")]
    FieldTooLarge { p: u64, k: u32 },
    #[error("modulus {0:?} is not a monic irreducible polynomial of the requested degree")]
    ReducibleModulus(Vec<u32>),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("{0} is only available on finite planes")]
    Unsupported(&'static str),
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("point {0} does not lie on the line of the algebra")]
    OffLine(String),
    /// A construction step produced no intersection point on valid input.
    #[error("construction invariant violated: {0}")]
    ConstructionInvariant(String),
    #[error("result depends on the auxiliary point: {0}")]
    AuxDependence(String),
    #[error("geometric inverse disagrees with search: {0}")]
    InverseMismatch(String),
    #[error("Desargues hypothesis violated: {0}")]
    DesarguesHypothesis(DesarguesClause),
    #[error("Pappus hypothesis violated: {0}")]
    PappusHypothesis(PappusClause),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str) -> Self {
        Error::Parse { what, input: input.to_owned() }
    }
}
