use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("invalid modulus {0}: must be a prime in [2, 2^31]")]
    InvalidModulus(u64),
    #[error("modules are defined over different algebras")]
    AlgebraMismatch,
    #[error("relation {relation} does not vanish on the action matrices")]
    RelationViolated { relation: String },
    #[error("multiplication table inconsistent: {0}")]
    TableInconsistent(String),
    #[error("operation not supported for {0} algebras")]
    UnsupportedAlgebraKind(&'static str),
    #[error("search space of {space} candidates exceeds budget {budget}")]
    BudgetExceeded { space: u128, budget: u64 },
    #[error("parameter out of domain: {0}")]
    ParameterOutOfDomain(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("undecided: {0}")]
    Undecided(String),
}

pub type Result<T> = std::result::Result<T, Error>;
