use thiserror::Error;

/// Errors raised by group, lattice, amalgam and witness computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("closure exceeded the order cap of {cap} (reached at least {reached})")]
    ClosureCapExceeded { cap: usize, reached: usize },
    #[error("generator {index} is not a permutation of 1..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("element {element} is out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("malformed element: {0}")]
    MalformedElement(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("subgroup is not normal: conjugating {element} by {conjugator} leaves it")]
    NotNormal { element: usize, conjugator: usize },
    #[error("map is not a homomorphism: f({x}*{y}) != f({x})*f({y})")]
    NotHomomorphism { x: usize, y: usize },
    #[error("embedding {0} is not injective")]
    NotInjective(usize),
    #[error("incompatible amalgam: {0}")]
    IncompatibleAmalgam(String),
    #[error("factor maps {i} and {j} disagree on amalgamated element {c}")]
    DisagreeOnAmalgam { c: String, i: usize, j: usize },
    #[error("image of the amalgamated subgroup is not central in factor {0}")]
    NotCentral(usize),
    #[error("element is the identity")]
    IdentityElement,
    #[error("group is not solvable")]
    NotSolvable,
    #[error("amalgamated subgroup is not proper in factor {0}")]
    NotProperSubgroup(usize),
    #[error("element orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("map {0} is not an isomorphism")]
    NotIsomorphism(usize),
    #[error("abelian group has torsion")]
    NotTorsionFree,
    #[error("embedding type mismatch: {0}")]
    EmbeddingTypeMismatch(String),
    #[error("word reduces to the identity")]
    IdentityWord,
    #[error("presentation would need {count} generators (limit {limit})")]
    TooManyGenerators { count: usize, limit: usize },
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    /// Variant name, for structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ClosureCapExceeded { .. } => "ClosureCapExceeded",
            Error::NotAPermutation { .. } => "NotAPermutation",
            Error::ElementOutOfRange { .. } => "ElementOutOfRange",
            Error::MalformedElement(_) => "MalformedElement",
            Error::InvalidGroup(_) => "InvalidGroup",
            Error::NotNormal { .. } => "NotNormal",
            Error::NotHomomorphism { .. } => "NotHomomorphism",
            Error::NotInjective(_) => "NotInjective",
            Error::IncompatibleAmalgam(_) => "IncompatibleAmalgam",
            Error::DisagreeOnAmalgam { .. } => "DisagreeOnAmalgam",
            Error::NotCentral(_) => "NotCentral",
            Error::IdentityElement => "IdentityElement",
            Error::NotSolvable => "NotSolvable",
            Error::NotProperSubgroup(_) => "NotProperSubgroup",
            Error::OrderMismatch { .. } => "OrderMismatch",
            Error::NotIsomorphism(_) => "NotIsomorphism",
            Error::NotTorsionFree => "NotTorsionFree",
            Error::EmbeddingTypeMismatch(_) => "EmbeddingTypeMismatch",
            Error::IdentityWord => "IdentityWord",
            Error::TooManyGenerators { .. } => "TooManyGenerators",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::Unsupported(_) => "Unsupported",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
