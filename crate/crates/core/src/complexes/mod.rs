//! Free bimodule complexes, their k-linear expansion, and Hochschild cochains.

mod cochain;
mod free;
mod kcomplex;
mod periodic;
mod tensor_square;
mod text;

pub use cochain::{solve_coboundary, 
    are_cohomologous, coboundary, cohomology_basis, internal_degree, is_coboundary, is_cocycle,
    Cochain, CohomologyBasis,
};
pub use free::{act, act_basis, element_times_generator, generator_times_element, FreeElement, FreeKey};
pub use kcomplex::{differential_columns, expand_to_k_complex, verify_exactness, ExactnessReport, KLinearComplex};
pub use periodic::{periodic_resolution, periodic_truncated_resolution};
pub use tensor_square::{TensorSquare, TensorSquareGen};
pub use text::{format_complex, parse_complex};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, DegreeMarker, GradedAlgebra};
use crate::foundations::{Degree, Field};

/// Truncation length used when callers do not specify one.
pub const DEFAULT_LENGTH: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("degree {degree} is beyond the truncation length {length}")]
    BeyondTruncation { degree: usize, length: usize },
    #[error("degree {0} needs the next differential, which the truncation does not contain")]
    NeedsNextDegree(usize),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("cochains live on different complexes or degrees")]
    Mismatch,
    #[error("cochain is not a cocycle")]
    NotCocycle,
    #[error("complex fails validation: {0}")]
    Invalid(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Provenance of a complex, used by operations that exploit a known shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    /// The periodic resolution of k[x]/(x^N).
    Periodic { n: usize },
    Bar,
    TwistedTotal,
    TensorSquare,
    Custom,
}

/// A truncated complex P_0 ← P_1 ← … ← P_N of free A-bimodules with an augmentation
/// μ: P_0 → A.
///
/// `differential[n][g]` is d(e_g) for the g-th generator of P_n, an element of
/// P_{n−1} (empty at n = 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeBimoduleComplex {
    algebra: Arc<GradedAlgebra>,
    kind: ComplexKind,
    gen_degrees: Vec<Vec<Degree>>,
    names: Vec<Vec<String>>,
    differential: Vec<Vec<FreeElement>>,
    augmentation: Vec<AlgebraElement>,
}

impl FreeBimoduleComplex {
    /// Checks shapes and index ranges. Use [`FreeBimoduleComplex::validate`] for the
    /// complex axioms.
    pub fn new(
        algebra: Arc<GradedAlgebra>,
        gen_degrees: Vec<Vec<Degree>>,
        differential: Vec<Vec<FreeElement>>,
        augmentation: Vec<AlgebraElement>,
    ) -> Result<Self, ComplexError> {
        if gen_degrees.is_empty() {
            return Err(ComplexError::Shape("a complex needs degree 0".into()));
        }
        if differential.len() != gen_degrees.len() {
            return Err(ComplexError::Shape("one differential list per degree".into()));
        }
        if augmentation.len() != gen_degrees[0].len() {
            return Err(ComplexError::Shape("augmentation needs one value per degree-0 generator".into()));
        }
        let dim = algebra.dim();
        for a in &augmentation {
            if a.len() != dim {
                return Err(AlgebraError::DimensionMismatch { expected: dim, found: a.len() }.into());
            }
        }
        for (n, degs) in gen_degrees.iter().enumerate() {
            for d in degs {
                algebra.group().check(d).map_err(AlgebraError::from)?;
            }
            if differential[n].len() != if n == 0 { 0 } else { degs.len() } {
                return Err(ComplexError::Shape(format!("degree {n}: differential count differs from rank")));
            }
            if n == 0 {
                continue;
            }
            let below = gen_degrees[n - 1].len();
            for x in &differential[n] {
                for ((g, l, r), _) in x.terms() {
                    if g >= below || l >= dim || r >= dim {
                        return Err(ComplexError::Shape(format!("degree {n}: index out of range")));
                    }
                }
            }
        }
        let names = gen_degrees
            .iter()
            .enumerate()
            .map(|(n, degs)| {
                if degs.len() == 1 {
                    vec![format!("e{n}")]
                } else {
                    (0..degs.len()).map(|g| format!("e{n}_{g}")).collect()
                }
            })
            .collect();
        Ok(FreeBimoduleComplex {
            algebra,
            kind: ComplexKind::Custom,
            gen_degrees,
            names,
            differential,
            augmentation,
        })
    }

    pub fn with_kind(mut self, kind: ComplexKind) -> Self {
        self.kind = kind;
        self
    }

    /// Replaces generator names (one list per degree, matching ranks).
    pub fn with_names(mut self, names: Vec<Vec<String>>) -> Self {
        assert_eq!(names.len(), self.gen_degrees.len(), "one name list per degree");
        for (a, b) in names.iter().zip(&self.gen_degrees) {
            assert_eq!(a.len(), b.len(), "one name per generator");
        }
        self.names = names;
        self
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn kind(&self) -> &ComplexKind {
        &self.kind
    }

    /// Highest degree present.
    pub fn length(&self) -> usize {
        self.gen_degrees.len() - 1
    }

    pub fn rank(&self, n: usize) -> usize {
        self.gen_degrees.get(n).map_or(0, Vec::len)
    }

    pub fn gen_degrees(&self, n: usize) -> &[Degree] {
        &self.gen_degrees[n]
    }

    pub fn gen_degree(&self, n: usize, g: usize) -> &Degree {
        &self.gen_degrees[n][g]
    }

    pub fn gen_name(&self, n: usize, g: usize) -> &str {
        &self.names[n][g]
    }

    pub fn names(&self) -> &[Vec<String>] {
        &self.names
    }

    /// d(e_g) for a generator of P_n, n ≥ 1.
    pub fn differential(&self, n: usize, g: usize) -> &FreeElement {
        &self.differential[n][g]
    }

    pub fn augmentation(&self) -> &[AlgebraElement] {
        &self.augmentation
    }

    pub fn check_degree(&self, n: usize) -> Result<(), ComplexError> {
        if n > self.length() {
            return Err(ComplexError::BeyondTruncation { degree: n, length: self.length() });
        }
        Ok(())
    }

    /// Generator e_g of P_n as an element.
    pub fn generator(&self, g: usize) -> FreeElement {
        FreeElement::generator(&self.algebra, g)
    }

    /// The differential P_n → P_{n−1} applied to an arbitrary element.
    pub fn apply_d(&self, n: usize, x: &FreeElement) -> FreeElement {
        assert!(n >= 1 && n <= self.length(), "differential out of range");
        let mut out = FreeElement::new();
        for ((g, l, r), c) in x.terms() {
            out.add_scaled(&act_basis(&self.algebra, l, &self.differential[n][g], r), c);
        }
        out
    }

    /// μ on an element of P_0.
    pub fn augment(&self, x: &FreeElement) -> AlgebraElement {
        let alg = &self.algebra;
        let mut out = alg.zero();
        for ((g, l, r), c) in x.terms() {
            let v = alg.mul(&alg.mul(&alg.basis(l), &self.augmentation[g]), &alg.basis(r));
            out = out.add(&v.scale(c));
        }
        out
    }

    /// Internal degree of the k-basis element b_l e_g b_r of P_n.
    pub fn term_degree(&self, n: usize, (g, l, r): FreeKey) -> Degree {
        let grp = self.algebra.group();
        grp.add(&grp.add(self.algebra.degree(l), &self.gen_degrees[n][g]), self.algebra.degree(r))
    }

    pub fn element_degree(&self, n: usize, x: &FreeElement) -> DegreeMarker {
        let mut found: Option<Degree> = None;
        for (k, _) in x.terms() {
            let d = self.term_degree(n, k);
            match &found {
                None => found = Some(d),
                Some(e) if *e != d => return DegreeMarker::Inhomogeneous,
                _ => {}
            }
        }
        found.map_or(DegreeMarker::Zero, DegreeMarker::Homogeneous)
    }

    /// k-dimension of P_n.
    pub fn k_dim(&self, n: usize) -> usize {
        let d = self.algebra.dim();
        self.rank(n) * d * d
    }

    /// Exhaustive check of d² = 0, μ∘d_1 = 0 and homogeneity of d and μ.
    pub fn validate(&self) -> ComplexReport {
        let mut report = ComplexReport::default();
        for n in 1..=self.length() {
            for g in 0..self.rank(n) {
                let dx = &self.differential[n][g];
                match self.element_degree(n - 1, dx) {
                    DegreeMarker::Homogeneous(d) if d != self.gen_degrees[n][g] => {
                        report.inhomogeneous.push((n, g))
                    }
                    DegreeMarker::Inhomogeneous => report.inhomogeneous.push((n, g)),
                    _ => {}
                }
                if n >= 2 && !self.apply_d(n - 1, dx).is_zero() {
                    report.d_squared.push((n, g));
                }
                if n == 1 && !self.augment(dx).is_zero() {
                    report.augmentation.push(g);
                }
            }
        }
        for (g, a) in self.augmentation.iter().enumerate() {
            match self.algebra.element_degree(a) {
                DegreeMarker::Homogeneous(d) if d != self.gen_degrees[0][g] => report.inhomogeneous.push((0, g)),
                DegreeMarker::Inhomogeneous => report.inhomogeneous.push((0, g)),
                _ => {}
            }
        }
        report
    }

    /// True when P_0 = A⊗A on a generator of degree 0 with μ(e_0) = 1.
    pub fn has_standard_start(&self) -> bool {
        self.rank(0) == 1 && self.gen_degrees[0][0].is_zero() && self.augmentation[0] == self.algebra.one()
    }

    /// Formats an element of P_n as `c·l⊗name⊗r + …`-style text.
    pub fn format_element(&self, n: usize, x: &FreeElement) -> String {
        let alg = &self.algebra;
        let unit = alg.unit();
        let terms: Vec<(String, crate::foundations::Scalar)> = x
            .terms()
            .map(|((g, l, r), c)| {
                let mut s = String::new();
                if l != unit {
                    s.push_str(alg.label(l));
                    s.push('·');
                }
                s.push_str(&self.names[n][g]);
                if r != unit {
                    s.push('·');
                    s.push_str(alg.label(r));
                }
                (s, c.clone())
            })
            .collect();
        crate::algebra::format_linear_combination(&terms)
    }
}

/// Failures found by [`FreeBimoduleComplex::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComplexReport {
    /// `(n, g)` with d_{n−1}(d_n(e_g)) ≠ 0.
    pub d_squared: Vec<(usize, usize)>,
    /// degree-1 generators with μ(d e_g) ≠ 0.
    pub augmentation: Vec<usize>,
    pub inhomogeneous: Vec<(usize, usize)>,
}

impl ComplexReport {
    pub fn passed(&self) -> bool {
        self.d_squared.is_empty() && self.augmentation.is_empty() && self.inhomogeneous.is_empty()
    }
}

impl fmt::Display for ComplexReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "complex: d^2 = 0, mu d = 0, homogeneous");
        }
        for (n, g) in &self.d_squared {
            writeln!(f, "d^2 != 0 on generator {g} of degree {n}")?;
        }
        for g in &self.augmentation {
            writeln!(f, "mu d != 0 on generator {g} of degree 1")?;
        }
        for (n, g) in &self.inhomogeneous {
            writeln!(f, "inhomogeneous differential on generator {g} of degree {n}")?;
        }
        Ok(())
    }
}
