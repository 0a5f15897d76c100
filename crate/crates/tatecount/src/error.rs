//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the exact-arithmetic, group, and induction layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in a cyclotomic field")]
    DivisionByZero,
    #[error("conductor {0} exceeds the supported bound {1}")]
    ConductorBound(u64, u64),
    #[error("matrix dimension {0} exceeds the supported bound {1}")]
    DimensionBound(usize, usize),
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error("highest weight has negative k component")]
    NegativeHighestWeight,
    #[error("factor count mismatch: {0} vs {1}")]
    FactorMismatch(usize, usize),
    #[error("not a character: offending weight {0}")]
    NotACharacter(String),
    #[error("dimension {0} exceeds the degree cap {1}")]
    DegreeCap(u64, u64),
    #[error("{0} does not divide {1}")]
    NotADivisor(u64, u64),
    #[error("group closure exceeds the order bound {0}")]
    OrderBound(usize),
    #[error("permutation point set of size {0} exceeds the bound {1}")]
    PointBound(usize, usize),
    #[error("abelianization order {0} exceeds the bound {1}")]
    AbelianizationBound(usize, usize),
    #[error("operands belong to different groups")]
    GroupMismatch,
    #[error("element {0} is not a member of the subgroup")]
    NotAMember(usize),
    #[error("generator images do not define a homomorphism: witness pair ({0}, {1})")]
    NotAHomomorphism(usize, usize),
    #[error("generator image is singular")]
    SingularImage,
    #[error("subgroup is not normal (conjugation by element {0} leaves it)")]
    NotNormal(usize),
    #[error("{0} is not a prime in the supported range 2..=13")]
    PrimeBound(u64),
    #[error("induced degree {0} exceeds the cap {1}")]
    DegreeBound(u64, u64),
    #[error("the quadratic coset is not in the stabilizer, no witness character")]
    NoWitness,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
