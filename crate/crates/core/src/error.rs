//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {modulus:?} is reducible over F_{p}")]
    ReduciblePolynomial { p: u32, modulus: Vec<u32> },
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("map is not convolution invertible")]
    NotConvolutionInvertible,
    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    FieldTooLargeForEnumeration { needed: u128, budget: u128 },
    #[error("budget of {0} exhausted")]
    BudgetExceeded(u128),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("construction needs positive characteristic")]
    CharZero,
    #[error("not a restricted Lie algebra: {0}")]
    NotRestrictedLie(String),
    #[error("closure is not a Hopf subalgebra: {0}")]
    ClosureNotHopf(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("no colinear section exists")]
    NoSection,
    #[error("no convolution-invertible section found within budget")]
    NoInvertibleSectionFound,
    #[error("no ribbon element supplied")]
    MissingRibbonElement,
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("not a Hopf morphism: {0}")]
    NotHopfMorphism(String),
    #[error("map is not surjective")]
    NotSurjective,
    #[error("no factorization: {0}")]
    NoFactorization(String),
    #[error("operation needs a constant group")]
    NotConstant,
    #[error("subgroup computations disagree: {0}")]
    Inconsistent(String),
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
