//! Comparison maps, diagonals, homotopy liftings, and the cup product and
//! bracket built from them.

mod chain_map;
mod diagonal;
mod homotopy;
mod products;

pub use chain_map::{lift_chain_map, BaseMap, ChainMap};
pub use diagonal::{diagonal_periodic, Resolution};
pub use homotopy::{
    lifting_rhs, second_condition_cochain, solve_homotopy_lifting, verify_homotopy_lifting, HomotopyLifting,
    LiftingReport, Residual,
};
pub use products::{bracket, cup};

pub(crate) use homotopy::solve_lifting_equation;

use thiserror::Error;

use crate::complexes::ComplexError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error("complexes live over different algebras")]
    AlgebraMismatch,
    #[error("degree {0} is beyond what the truncation determines")]
    BeyondTruncation(usize),
    #[error("no solution in degree {degree}: the target is not exact there or the input is not a chain map")]
    Inconsistent { degree: usize },
    #[error("supplied map is not a chain map in degree {degree}")]
    NotAChainMap { degree: usize },
    #[error("input cochain is not a cocycle")]
    NotCocycle,
    #[error("brackets with degree-0 classes are not defined by homotopy liftings")]
    DegreeZero,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}
