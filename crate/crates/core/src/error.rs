use thiserror::Error;

use crate::field::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("invalid field descriptor: {0}")]
    InvalidField(String),
    #[error("square root does not exist in {0} and nested extensions are not supported")]
    AlreadyExtended(Field),
    #[error("operation not supported over {field}: {reason}")]
    UnsupportedField { field: Field, reason: String },
    #[error("prime {p} divides a denominator")]
    BadPrime { p: u64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("action matrices do not commute")]
    NonCommutingActions,
    #[error("algebra is not solvable")]
    NotSolvable,
    #[error("a further field extension is needed: {0}")]
    FieldExtensionNeeded(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("input is inconsistent with the classification: {0}")]
    InconsistentWithClassification(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("random generator failed to produce a valid instance after {0} attempts")]
    GeneratorStuck(usize),
    #[error("enumeration budget exceeded: {candidates} candidates > budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}
