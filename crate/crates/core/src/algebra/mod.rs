//! Finite-dimensional graded algebras given by structure constants.

mod builders;
mod element;
mod twisted;

pub use builders::{
    direct_product, ground_field, square_zero, truncated_polynomial, upper_triangular,
};
pub use element::{AlgebraElement, BimoduleWord, DegreeMarker};
pub use twisted::twisted_tensor_algebra;

use std::fmt;

use thiserror::Error;

use crate::foundations::{Degree, Field, FoundationError, GradingGroup, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("element has {found} coordinates, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis index {0} out of range")]
    BadIndex(usize),
    #[error("structure table has wrong shape")]
    TableShape,
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("coefficient field mismatch")]
    FieldMismatch,
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("bicharacter does not match the grading groups of the factors")]
    BicharacterDomain,
    #[error(transparent)]
    Foundation(#[from] FoundationError),
}

/// A finite-dimensional algebra over an exact field, graded by a finitely
/// generated abelian group, presented by its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    field: Field,
    group: GradingGroup,
    labels: Vec<String>,
    degrees: Vec<Degree>,
    unit: usize,
    /// `table[i][j]` lists `(l, c)` with `b_i b_j = Σ c b_l`.
    table: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl GradedAlgebra {
    /// Checks the shape of the data only; algebra axioms are checked by [`GradedAlgebra::validate`].
    pub fn new(
        field: Field,
        group: GradingGroup,
        labels: Vec<String>,
        degrees: Vec<Degree>,
        unit: usize,
        table: Vec<Vec<Vec<(usize, Scalar)>>>,
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if degrees.len() != dim || table.len() != dim || table.iter().any(|r| r.len() != dim) {
            return Err(AlgebraError::TableShape);
        }
        if unit >= dim {
            return Err(AlgebraError::BadIndex(unit));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(AlgebraError::DuplicateLabel(l.clone()));
            }
        }
        for d in &degrees {
            group.check(d)?;
        }
        let mut clean = table;
        for row in clean.iter_mut() {
            for entry in row.iter_mut() {
                let mut merged: std::collections::BTreeMap<usize, Scalar> = Default::default();
                for (l, c) in entry.drain(..) {
                    if l >= dim {
                        return Err(AlgebraError::BadIndex(l));
                    }
                    if c.field() != field {
                        return Err(AlgebraError::FieldMismatch);
                    }
                    crate::linalg::add_entry(&mut merged, l, c);
                }
                *entry = merged.into_iter().collect();
            }
        }
        Ok(GradedAlgebra {
            field,
            group,
            labels,
            degrees,
            unit,
            table: clean,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> &Degree {
        &self.degrees[i]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    /// `b_i · b_j` as a sparse list.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i][j]
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.field, self.dim())
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis(self.unit)
    }

    pub fn basis(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(self.field, self.dim(), i)
    }

    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<AlgebraElement, AlgebraError> {
        if coeffs.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: coeffs.len(),
            });
        }
        if coeffs.iter().any(|c| c.field() != self.field) {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(AlgebraElement::from_coeffs(coeffs))
    }

    fn check(&self, a: &AlgebraElement) -> Result<(), AlgebraError> {
        if a.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: a.len(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub(crate) fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, ca) in a.support() {
            for (j, cb) in b.support() {
                let c = ca * cb;
                for (l, s) in &self.table[i][j] {
                    out[*l] += &(&c * s);
                }
            }
        }
        AlgebraElement::from_coeffs(out)
    }

    /// Product of three basis elements, as a sparse list.
    pub(crate) fn mul3(&self, i: usize, j: usize, k: usize) -> Vec<(usize, Scalar)> {
        let mut acc = crate::linalg::SparseVec::new();
        for (l, c) in &self.table[i][j] {
            for (r, d) in &self.table[*l][k] {
                crate::linalg::add_entry(&mut acc, *r, c * d);
            }
        }
        acc.into_iter().collect()
    }

    /// Common degree of the support of `a`.
    pub fn element_degree(&self, a: &AlgebraElement) -> DegreeMarker {
        let mut found: Option<&Degree> = None;
        for (i, _) in a.support() {
            match found {
                None => found = Some(&self.degrees[i]),
                Some(d) if *d == self.degrees[i] => {}
                Some(_) => return DegreeMarker::Inhomogeneous,
            }
        }
        match found {
            None => DegreeMarker::Zero,
            Some(d) => DegreeMarker::Homogeneous(d.clone()),
        }
    }

    /// Exhaustive check of associativity, unit laws and graded multiplication.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut report = ValidationReport::default();
        if !self.degrees[self.unit].is_zero() {
            report.unit_degree_nonzero = true;
        }
        for i in 0..n {
            if self.table[self.unit][i] != vec![(i, self.field.one())] {
                report.left_unit_failures.push(i);
            }
            if self.table[i][self.unit] != vec![(i, self.field.one())] {
                report.right_unit_failures.push(i);
            }
            for j in 0..n {
                let expected = self.group.add(&self.degrees[i], &self.degrees[j]);
                for (l, _) in &self.table[i][j] {
                    if self.degrees[*l] != expected {
                        report.grading_failures.push((i, j, *l));
                    }
                }
                for k in 0..n {
                    let left = {
                        let mut acc = crate::linalg::SparseVec::new();
                        for (l, c) in &self.table[i][j] {
                            for (r, d) in &self.table[*l][k] {
                                crate::linalg::add_entry(&mut acc, *r, c * d);
                            }
                        }
                        acc
                    };
                    let right = {
                        let mut acc = crate::linalg::SparseVec::new();
                        for (l, c) in &self.table[j][k] {
                            for (r, d) in &self.table[i][*l] {
                                crate::linalg::add_entry(&mut acc, *r, c * d);
                            }
                        }
                        acc
                    };
                    if left != right {
                        report.associativity_failures.push((i, j, k));
                    }
                }
            }
        }
        report
    }

    /// Renders an element as `c·label + ...` (`0` for zero).
    pub fn format_element(&self, a: &AlgebraElement) -> String {
        let terms: Vec<(String, Scalar)> = a
            .support()
            .map(|(i, c)| (self.labels[i].clone(), c.clone()))
            .collect();
        format_linear_combination(&terms)
    }
}

/// `2·x + -1·y`, with unit coefficients dropped.
pub(crate) fn format_linear_combination(terms: &[(String, Scalar)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let parts: Vec<String> = terms
        .iter()
        .map(|(label, c)| {
            if c.is_one() {
                label.clone()
            } else {
                format!("{c}·{label}")
            }
        })
        .collect();
    parts.join(" + ")
}

/// Outcome of [`GradedAlgebra::validate`]; every violated triple is listed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub associativity_failures: Vec<(usize, usize, usize)>,
    pub left_unit_failures: Vec<usize>,
    pub right_unit_failures: Vec<usize>,
    /// `(i, j, l)` with `c_{ij}^l ≠ 0` but `|b_l| ≠ |b_i| + |b_j|`.
    pub grading_failures: Vec<(usize, usize, usize)>,
    pub unit_degree_nonzero: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.associativity_failures.is_empty()
            && self.left_unit_failures.is_empty()
            && self.right_unit_failures.is_empty()
            && self.grading_failures.is_empty()
            && !self.unit_degree_nonzero
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return writeln!(f, "PASS algebra axioms");
        }
        for (i, j, k) in &self.associativity_failures {
            writeln!(f, "FAIL associativity ({i},{j},{k})")?;
        }
        for i in &self.left_unit_failures {
            writeln!(f, "FAIL left-unit {i}")?;
        }
        for i in &self.right_unit_failures {
            writeln!(f, "FAIL right-unit {i}")?;
        }
        for (i, j, l) in &self.grading_failures {
            writeln!(f, "FAIL grading ({i},{j})->{l}")?;
        }
        if self.unit_degree_nonzero {
            writeln!(f, "FAIL unit-degree")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn truncated_relations() {
        let a = truncated_polynomial(q(), 2, "x", GradingGroup::integers(), &[1]).unwrap();
        let x = a.basis(1);
        assert!(a.multiply(&x, &x).unwrap().is_zero());
        let b = truncated_polynomial(q(), 3, "x", GradingGroup::integers(), &[1]).unwrap();
        let x = b.basis(1);
        let x2 = b.basis(2);
        assert_eq!(b.multiply(&x, &x).unwrap(), x2);
        assert!(b.multiply(&x, &x2).unwrap().is_zero());
    }

    #[test]
    fn unit_law_on_elements() {
        let a = truncated_polynomial(q(), 3, "x", GradingGroup::integers(), &[1]).unwrap();
        let el = a
            .element(vec![q().from_i64(3), q().from_i64(-2), q().from_ratio(1, 2).unwrap()])
            .unwrap();
        assert_eq!(a.multiply(&a.one(), &el).unwrap(), el);
        assert_eq!(a.multiply(&el, &a.one()).unwrap(), el);
    }

    #[test]
    fn multiply_rejects_foreign_elements() {
        let a = truncated_polynomial(q(), 2, "x", GradingGroup::integers(), &[1]).unwrap();
        let b = truncated_polynomial(q(), 3, "x", GradingGroup::integers(), &[1]).unwrap();
        assert!(a.multiply(&a.one(), &b.one()).is_err());
    }

    #[test]
    fn validate_examples() {
        let a = truncated_polynomial(q(), 2, "x", GradingGroup::integers(), &[1]).unwrap();
        assert!(a.validate().passed());

        // x·x = x with |x| = 1 breaks the grading
        let one = q().one();
        let table = vec![
            vec![vec![(0, one.clone())], vec![(1, one.clone())]],
            vec![vec![(1, one.clone())], vec![(1, one.clone())]],
        ];
        let bad = GradedAlgebra::new(
            q(),
            GradingGroup::integers(),
            vec!["1".into(), "x".into()],
            vec![Degree(vec![0]), Degree(vec![1])],
            0,
            table,
        )
        .unwrap();
        let rep = bad.validate();
        assert_eq!(rep.grading_failures, vec![(1, 1, 1)]);

        // b·b = unit, unit·b = 0
        let table = vec![
            vec![vec![(0, one.clone())], vec![]],
            vec![vec![(1, one.clone())], vec![(0, one.clone())]],
        ];
        let bad = GradedAlgebra::new(
            q(),
            GradingGroup::trivial(),
            vec!["1".into(), "b".into()],
            vec![Degree(vec![]), Degree(vec![])],
            0,
            table,
        )
        .unwrap();
        let rep = bad.validate();
        assert!(!rep.passed());
        assert!(rep.left_unit_failures.contains(&1));
        assert!(!rep.associativity_failures.is_empty());
    }

    #[test]
    fn element_degrees() {
        let a = truncated_polynomial(q(), 2, "x", GradingGroup::integers(), &[1]).unwrap();
        assert_eq!(a.element_degree(&a.basis(1)), DegreeMarker::Homogeneous(Degree(vec![1])));
        let mixed = a.element(vec![q().one(), q().one()]).unwrap();
        assert_eq!(a.element_degree(&mixed), DegreeMarker::Inhomogeneous);
        assert_eq!(a.element_degree(&a.zero()), DegreeMarker::Zero);
    }
}
