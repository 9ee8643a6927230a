use std::collections::BTreeMap;

use crate::foundations::{Degree, Field, Scalar};

/// Coefficient vector of an algebra element on the chosen basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    coeffs: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn zero(field: Field, dim: usize) -> Self {
        AlgebraElement {
            coeffs: vec![field.zero(); dim],
        }
    }

    pub fn basis(field: Field, dim: usize, i: usize) -> Self {
        let mut e = Self::zero(field, dim);
        e.coeffs[i] = field.one();
        e
    }

    pub(crate) fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        AlgebraElement { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.len(), other.len(), "algebra elements of different algebras");
        AlgebraElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.len(), other.len(), "algebra elements of different algebras");
        AlgebraElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add_scaled_basis(&mut self, i: usize, c: &Scalar) {
        self.coeffs[i] += c;
    }
}

/// Degree of an element: a common degree of its support, or one of two markers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeMarker {
    /// The zero element, homogeneous of every degree.
    Zero,
    Homogeneous(Degree),
    Inhomogeneous,
}

impl DegreeMarker {
    pub fn homogeneous(&self) -> Option<&Degree> {
        match self {
            DegreeMarker::Homogeneous(d) => Some(d),
            _ => None,
        }
    }
}

/// An element Σ c · (b_l ⊗ b_r) of the enveloping algebra, acting on a
/// bimodule by `m ↦ Σ c · b_l m b_r`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BimoduleWord {
    terms: BTreeMap<(usize, usize), Scalar>,
}

impl BimoduleWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, left: usize, right: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// Terms in canonical (sorted) order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.terms.iter().map(|(&(l, r), c)| (l, r, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
