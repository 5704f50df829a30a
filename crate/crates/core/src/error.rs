use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(u32),
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("arrows `{0}` and `{1}` are not composable (`{1}` must end where `{0}` starts)")]
    NotComposable(String, String),
    #[error("inhomogeneous relation: terms of lengths {0} and {1}")]
    InhomogeneousRelation(usize, usize),
    #[error("relation terms must have length at least 2, found {0}")]
    RelationTooShort(usize),
    #[error("endpoint mismatch: relation terms disagree on source or target")]
    EndpointMismatch,
    #[error("empty relation")]
    EmptyRelation,
    #[error("not finite-dimensional: paths of length {0} survive (length cap {0})")]
    NotFiniteDimensional(usize),
    #[error("representation violates a relation of the algebra")]
    RelationViolated,
    #[error("representation shape does not match the quiver")]
    ShapeMismatch,
    #[error("algebra mismatch: operands live over different algebras")]
    AlgebraMismatch,
    #[error("field too small: p = {p} must exceed endomorphism dimension {dim}")]
    FieldTooSmall { p: u32, dim: usize },
    #[error("decomposition did not converge to local summands")]
    DecompositionFailed,
    #[error("not tau-rigid")]
    NotTauRigid,
    #[error("support overlap: Hom(P({0}), M) is nonzero")]
    SupportOverlap(u32),
    #[error("wrong summand count: {summands} summands + {killed} killed vertices != {vertices}")]
    WrongSummandCount {
        summands: usize,
        killed: usize,
        vertices: usize,
    },
    #[error("invalid mutation position {0}")]
    InvalidPosition(usize),
    #[error("non-unique completion: {0}")]
    NonUniqueCompletion(String),
    #[error("node budget exceeded: more than {0} nodes")]
    BudgetExceeded(usize),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("guard rail violated: {0}")]
    GuardRail(String),
    #[error("invalid Dynkin spec {series}{rank}")]
    InvalidSpec { series: char, rank: usize },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}
