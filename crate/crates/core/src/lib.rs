//! Exact Hochschild cohomology, cup products and Gerstenhaber brackets for
//! finite-dimensional graded algebras and their bicharacter-twisted tensor
//! products, computed on free bimodule resolutions via homotopy liftings.

pub mod algebra;
pub mod complexes;
pub mod example;
pub mod foundations;
pub mod linalg;
pub mod lifting;
pub mod oracle;
pub mod twist;
