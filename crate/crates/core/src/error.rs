use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("linear system has no non-negative integral solution")]
    NoSolution,

    #[error("non-negative integral solution is not unique")]
    AmbiguousSolution,

    #[error("rank {rank} is not admissible for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("not a finite Cartan type: {0}")]
    InvalidType(String),

    #[error("index {index} out of range 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("matrix is not skew-symmetrizable")]
    NotSkewSymmetrizable,

    #[error("weight {0:?} is not an element of the c-orbit set")]
    WeightNotInPiC(Vec<i64>),

    #[error("Coxeter orbit of the fundamental weight {0} did not terminate")]
    NonTermination(usize),

    #[error("variables {0} and {1} are not exchangeable")]
    NotExchangeable(usize, usize),

    #[error("exchange monomial for pair ({0}, {1}) could not be decomposed over the common clique")]
    CliqueAmbiguity(usize, usize),

    #[error("exchange relation {0} is not primitive")]
    NotPrimitive(usize),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("wrong type for this construction: {0}")]
    WrongType(String),
}
