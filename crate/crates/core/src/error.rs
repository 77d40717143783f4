use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (expected {range})")]
    InvalidIndex { index: usize, range: &'static str },

    #[error("subgroup is not isotropic for the intersection form")]
    NotIsotropic,

    #[error("invalid trisection diagram: {}", .0.join("; "))]
    InvalidDiagram(Vec<String>),

    #[error("differentials at position {position} do not compose to zero")]
    NotAComplex { position: usize },

    #[error("no term in degree {0}")]
    InvalidDegree(i64),

    #[error("cocycle condition violated: {0}")]
    CocycleViolation(String),

    #[error("dual representative is not a cycle: {0}")]
    NotACycle(String),

    #[error("class does not lie in {0}")]
    NotInSubgroup(&'static str),

    #[error("genus {genus} exceeds the enumeration bound {bound}")]
    GenusAboveBound { genus: usize, bound: usize },

    #[error("unknown builtin diagram `{0}`")]
    UnknownBuiltin(String),

    #[error("linear system has no integral solution")]
    SingularSolve,

    #[error("ledgers have different bases (`{left}` vs `{right}`)")]
    BaseMismatch { left: String, right: String },

    #[error("a curve cannot be slid over itself (index {0})")]
    SelfSlide(usize),

    #[error("genus must be at least 1 for random generation")]
    ZeroGenus,

    #[error("diagram format: {0}")]
    Format(String),
}
