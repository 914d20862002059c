use thiserror::Error;

use crate::degree::Degree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operator of order {order} has no class in grade {grade}")]
    OrderExceedsGrade { order: Degree, grade: usize },
    #[error("expected an operator of order at most 1, found order {0}")]
    OrderAboveOne(Degree),
    #[error("operator is not a derivation")]
    NotADerivation,
    #[error("symbol terms are not homogeneous: found xi-degrees {0} and {1}")]
    NotHomogeneous(usize, usize),
    #[error("jet map: {0}")]
    JetMap(String),
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
