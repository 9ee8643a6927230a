use std::collections::BTreeMap;

use crate::algebra::{AlgebraElement, BimoduleWord, GradedAlgebra};
use crate::foundations::Scalar;

/// `(generator, left basis index, right basis index)`: the element `b_l · e_g · b_r`.
pub type FreeKey = (usize, usize, usize);

/// An element of a free bimodule ⊕_g A e_g A, on the k-basis `b_l e_g b_r`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeElement {
    terms: BTreeMap<FreeKey, Scalar>,
}

impl FreeElement {
    pub fn new() -> Self {
        Self::default()
    }

    /// `1 · e_g · 1`.
    pub fn generator(algebra: &GradedAlgebra, g: usize) -> Self {
        let mut x = Self::new();
        x.add_term(g, algebra.unit(), algebra.unit(), algebra.field().one());
        x
    }

    pub fn add_term(&mut self, g: usize, left: usize, right: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (g, left, right);
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

    pub fn add_scaled(&mut self, other: &FreeElement, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (&(g, l, r), v) in &other.terms {
            self.add_term(g, l, r, v * c);
        }
    }

    pub fn add(&mut self, other: &FreeElement) {
        for (&(g, l, r), v) in &other.terms {
            self.add_term(g, l, r, v.clone());
        }
    }

    pub fn scaled(&self, c: &Scalar) -> FreeElement {
        let mut out = FreeElement::new();
        out.add_scaled(self, c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (FreeKey, &Scalar)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coefficient(&self, g: usize, left: usize, right: usize) -> Option<&Scalar> {
        self.terms.get(&(g, left, right))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Generators with nonzero coefficient words.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = self.terms.keys().map(|k| k.0).collect();
        gens.dedup();
        gens
    }

    /// The coefficient word of generator `g`, i.e. the entry of a
    /// differential matrix column.
    pub fn word(&self, g: usize) -> BimoduleWord {
        let mut w = BimoduleWord::new();
        for (&(h, l, r), c) in self.terms.range((g, 0, 0)..=(g, usize::MAX, usize::MAX)) {
            debug_assert_eq!(h, g);
            w.add_term(l, r, c.clone());
        }
        w
    }

    pub fn from_words(words: &[(usize, BimoduleWord)]) -> FreeElement {
        let mut out = FreeElement::new();
        for (g, w) in words {
            for (l, r, c) in w.terms() {
                out.add_term(*g, l, r, c.clone());
            }
        }
        out
    }

    /// Flat index `(g·d + l)·d + r` used by the k-linear expansion.
    pub fn to_sparse(&self, dim: usize) -> crate::linalg::SparseVec {
        self.terms
            .iter()
            .map(|(&(g, l, r), c)| ((g * dim + l) * dim + r, c.clone()))
            .collect()
    }

    pub fn from_sparse(v: &crate::linalg::SparseVec, dim: usize) -> FreeElement {
        let mut out = FreeElement::new();
        for (&k, c) in v {
            out.add_term(k / (dim * dim), (k / dim) % dim, k % dim, c.clone());
        }
        out
    }
}

/// `b_left · x · b_right`.
pub fn act_basis(algebra: &GradedAlgebra, left: usize, x: &FreeElement, right: usize) -> FreeElement {
    let unit = algebra.unit();
    if left == unit && right == unit {
        return x.clone();
    }
    let mut out = FreeElement::new();
    for ((g, l, r), c) in x.terms() {
        let lefts = algebra.mul_basis(left, l);
        if lefts.is_empty() {
            continue;
        }
        let rights = algebra.mul_basis(r, right);
        for (l2, a) in lefts {
            let ca = c * a;
            for (r2, b) in rights {
                out.add_term(g, *l2, *r2, &ca * b);
            }
        }
    }
    out
}

/// `a · x · b` for arbitrary algebra elements.
pub fn act(algebra: &GradedAlgebra, left: &AlgebraElement, x: &FreeElement, right: &AlgebraElement) -> FreeElement {
    let mut out = FreeElement::new();
    for (i, ci) in left.support() {
        for (j, cj) in right.support() {
            out.add_scaled(&act_basis(algebra, i, x, j), &(ci * cj));
        }
    }
    out
}

/// The free-module element `Σ_s a_s · b_s e_g b_right`.
pub fn element_times_generator(a: &AlgebraElement, g: usize, right: usize) -> FreeElement {
    let mut out = FreeElement::new();
    for (s, c) in a.support() {
        out.add_term(g, s, right, c.clone());
    }
    out
}

/// The free-module element `Σ_s b_left e_g · a_s b_s`.
pub fn generator_times_element(left: usize, g: usize, a: &AlgebraElement) -> FreeElement {
    let mut out = FreeElement::new();
    for (s, c) in a.support() {
        out.add_term(g, left, s, c.clone());
    }
    out
}
