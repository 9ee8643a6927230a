//! Exact scalars, grading groups, bicharacters and the graded sign rule.

mod bicharacter;
mod grading;
mod scalar;

pub use bicharacter::{koszul_sign, parity_sign, Bicharacter};
pub use grading::{Degree, GradingGroup};
pub use scalar::{Field, Scalar};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FoundationError {
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
    #[error("torsion order {0} must be at least 2")]
    BadTorsion(u64),
    #[error("degree has {found} coordinates, group has {expected} factors (or torsion residue out of range)")]
    GroupMismatch { expected: usize, found: usize },
    #[error("cannot parse scalar `{0}`")]
    BadScalar(String),
    #[error("cannot parse degree `{0}`")]
    BadDegree(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("bicharacter table does not match the grading groups")]
    BicharacterShape,
    #[error("bicharacter value and field disagree")]
    FieldMismatch,
    #[error("bicharacter value on generators ({left},{right}) is zero")]
    ZeroTwist { left: usize, right: usize },
    #[error("bicharacter value on generators ({left},{right}) is not an {order}-th root of unity")]
    IllDefinedTwist { left: usize, right: usize, order: u64 },
}
