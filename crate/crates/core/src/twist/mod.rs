//! Twisted tensor products of resolutions and the factorization of brackets.

mod cochain;
mod lifting;
mod resolution;
mod sigma;
mod total;
mod verify;

pub use cochain::{graded_tensor_bracket, graded_tensor_cup, tensor_cochain, PairDegrees, Side, TensorCochain};
pub use lifting::tensor_homotopy_lifting;
pub use resolution::{twisted_diagonal, twisted_tensor_resolution, TwistedTensorResolution};
pub use sigma::{sigma, sigma_inv, Component, Reshuffled, SigmaMaps};
pub use total::{rewrite_scalar, TotalGen, TwistedTotal};
pub use verify::{verify_factorization, FactorClass, FactorizationOptions, FactorizationReport, PairVerdict};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::complexes::ComplexError;
use crate::foundations::Degree;
use crate::lifting::LiftError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistError {
    #[error("bicharacter or algebras do not match the factors")]
    FactorMismatch,
    #[error("{0} factor must start with P_0 = A⊗A, generator of degree 0, μ(e_0) = 1")]
    NonStandardStart(&'static str),
    #[error("internal degree {degree} is not in the {side:?} kernel: t is nontrivial against generator {generator}")]
    NotInKernel { side: Side, degree: Degree, generator: usize },
    #[error("input is not homogeneous")]
    Inhomogeneous,
    #[error("{0:?} factor lifting does not satisfy the lifting equation")]
    UnverifiedLifting(Side),
    #[error("degree {0} is beyond the truncation")]
    BeyondTruncation(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Lift(#[from] LiftError),
}
