//! Independent ground truth: the bar resolution, the circle-product bracket on
//! it, and comparison maps that move classes between a resolution and the bar
//! complex.
//!
//! Sign convention for the circle product, fixed here and nowhere else:
//! f∘g = Σ_i (−1)^{(i−1)(n−1)} f(…, g(r_i, …, r_{i+n−1}), …) and
//! [f, g] = f∘g − (−1)^{(m−1)(n−1)} g∘f. In degree 1 this is the commutator of
//! derivations. The oracle-equivalence check is what validates it against the
//! homotopy-lifting bracket.

mod bar;
mod check;
mod circle;
mod transport;

pub use bar::{bar_resolution, BarComplex, BAR_SIZE_GUARD};
pub use check::{oracle_check, OracleReport, OracleVerdict};
pub use circle::{circle_bracket, circle_product};
pub use transport::Comparison;

use thiserror::Error;

use crate::complexes::ComplexError;
use crate::lifting::LiftError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("bar complex of a {dim}-dimensional algebra up to degree {truncation} exceeds the size guard")]
    TooLarge { dim: usize, truncation: usize },
    #[error("degree {0} is beyond the bar truncation")]
    BeyondTruncation(usize),
    #[error("comparison maps do not round-trip on cohomology in degree {0}")]
    Uncertified(usize),
    #[error("cochain does not live on this complex")]
    Mismatch,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Lift(#[from] LiftError),
}
