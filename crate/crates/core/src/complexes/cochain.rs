use std::collections::BTreeMap;

use super::{ComplexError, FreeBimoduleComplex, FreeElement};
use crate::algebra::{AlgebraElement, DegreeMarker};
use crate::foundations::{Degree, Field, Scalar};
use crate::linalg::{add_entry, Echelon, SparseVec};

/// An element of Hom_{Aᵉ}(P_n, A), stored by its values on the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    values: Vec<AlgebraElement>,
}

impl Cochain {
    pub fn new(degree: usize, values: Vec<AlgebraElement>) -> Self {
        Cochain { degree, values }
    }

    pub fn zero(p: &FreeBimoduleComplex, n: usize) -> Self {
        Cochain {
            degree: n,
            values: vec![p.algebra().zero(); p.rank(n)],
        }
    }

    /// The cochain e_g ↦ `value`, zero on the other generators.
    pub fn single(p: &FreeBimoduleComplex, n: usize, g: usize, value: AlgebraElement) -> Self {
        let mut c = Self::zero(p, n);
        c.values[g] = value;
        c
    }

    /// μ viewed as a degree-0 cochain.
    pub fn augmentation(p: &FreeBimoduleComplex) -> Self {
        Cochain {
            degree: 0,
            values: p.augmentation().to_vec(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[AlgebraElement] {
        &self.values
    }

    pub fn value(&self, g: usize) -> &AlgebraElement {
        &self.values[g]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(AlgebraElement::is_zero)
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree, "cochains of different degrees");
        Cochain {
            degree: self.degree,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree, "cochains of different degrees");
        Cochain {
            degree: self.degree,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        Cochain {
            degree: self.degree,
            values: self.values.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// f(x) for x ∈ P_n: Σ c · b_l f(e_g) b_r.
    pub fn evaluate(&self, p: &FreeBimoduleComplex, x: &FreeElement) -> AlgebraElement {
        let alg = p.algebra();
        let mut out = alg.zero();
        for ((g, l, r), c) in x.terms() {
            let v = &self.values[g];
            if v.is_zero() {
                continue;
            }
            let w = alg.mul(&alg.mul(&alg.basis(l), v), &alg.basis(r));
            out = out.add(&w.scale(c));
        }
        out
    }

    /// Coordinates on the basis (g, s) ↦ index g·dim A + s.
    pub fn to_sparse(&self) -> SparseVec {
        let mut out = SparseVec::new();
        for (g, v) in self.values.iter().enumerate() {
            let dim = v.len();
            for (s, c) in v.support() {
                out.insert(g * dim + s, c.clone());
            }
        }
        out
    }

    pub fn from_sparse(p: &FreeBimoduleComplex, n: usize, v: &SparseVec) -> Cochain {
        let dim = p.algebra().dim();
        let mut c = Cochain::zero(p, n);
        for (&k, x) in v {
            c.values[k / dim].add_scaled_basis(k % dim, x);
        }
        c
    }

    /// Human-readable `e1 -> x; e2 -> 0`.
    pub fn format(&self, p: &FreeBimoduleComplex) -> String {
        let alg = p.algebra();
        let parts: Vec<String> = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(g, v)| format!("{} -> {}", p.gen_name(self.degree, g), alg.format_element(v)))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("; ")
        }
    }
}

/// Internal degree of the basis cochain e_g ↦ b_s: |e_g| − |b_s|.
pub(crate) fn basis_cochain_degree(p: &FreeBimoduleComplex, n: usize, g: usize, s: usize) -> Degree {
    p.algebra().group().sub(p.gen_degree(n, g), p.algebra().degree(s))
}

/// The common v with |f(e)| = |e| − v, or a marker.
pub fn internal_degree(p: &FreeBimoduleComplex, f: &Cochain) -> DegreeMarker {
    let dim = p.algebra().dim();
    let mut found: Option<Degree> = None;
    for k in f.to_sparse().keys() {
        let d = basis_cochain_degree(p, f.degree, k / dim, k % dim);
        match &found {
            None => found = Some(d),
            Some(e) if *e != d => return DegreeMarker::Inhomogeneous,
            _ => {}
        }
    }
    found.map_or(DegreeMarker::Zero, DegreeMarker::Homogeneous)
}

/// Columns of δ: C^n → C^{n+1}, one per basis cochain (g, s).
pub(crate) fn coboundary_columns(p: &FreeBimoduleComplex, n: usize) -> Vec<SparseVec> {
    let alg = p.algebra();
    let dim = alg.dim();
    let mut cols = vec![SparseVec::new(); p.rank(n) * dim];
    for h in 0..p.rank(n + 1) {
        for ((g, l, r), c) in p.differential(n + 1, h).terms() {
            for s in 0..dim {
                for (w, c2) in alg.mul3(l, s, r) {
                    add_entry(&mut cols[g * dim + s], h * dim + w, c * &c2);
                }
            }
        }
    }
    cols
}

/// δf = f∘d_{n+1}.
pub fn coboundary(p: &FreeBimoduleComplex, f: &Cochain) -> Result<Cochain, ComplexError> {
    let n = f.degree;
    if n + 1 > p.length() {
        return Err(ComplexError::NeedsNextDegree(n));
    }
    check_shape(p, f)?;
    let values = (0..p.rank(n + 1))
        .map(|h| f.evaluate(p, p.differential(n + 1, h)))
        .collect();
    Ok(Cochain::new(n + 1, values))
}

fn check_shape(p: &FreeBimoduleComplex, f: &Cochain) -> Result<(), ComplexError> {
    p.check_degree(f.degree)?;
    if f.values.len() != p.rank(f.degree) || f.values.iter().any(|v| v.len() != p.algebra().dim()) {
        return Err(ComplexError::Mismatch);
    }
    Ok(())
}

pub fn is_cocycle(p: &FreeBimoduleComplex, f: &Cochain) -> Result<bool, ComplexError> {
    Ok(coboundary(p, f)?.is_zero())
}

/// A cochain g of degree n−1 with δg = f, if one exists (never in degree 0).
pub fn solve_coboundary(p: &FreeBimoduleComplex, f: &Cochain) -> Result<Option<Cochain>, ComplexError> {
    check_shape(p, f)?;
    let n = f.degree;
    if n == 0 {
        return Ok(None);
    }
    let ech = Echelon::from_columns(p.field(), coboundary_columns(p, n - 1));
    Ok(ech.solve(&f.to_sparse()).map(|x| Cochain::from_sparse(p, n - 1, &x)))
}

pub fn is_coboundary(p: &FreeBimoduleComplex, f: &Cochain) -> Result<bool, ComplexError> {
    check_shape(p, f)?;
    if f.degree == 0 {
        return Ok(f.is_zero());
    }
    let ech = Echelon::from_columns(p.field(), coboundary_columns(p, f.degree - 1));
    Ok(ech.contains(&f.to_sparse()))
}

/// Both arguments must be cocycles of the same degree.
pub fn are_cohomologous(p: &FreeBimoduleComplex, f: &Cochain, g: &Cochain) -> Result<bool, ComplexError> {
    if f.degree != g.degree {
        return Err(ComplexError::Mismatch);
    }
    if !is_cocycle(p, f)? || !is_cocycle(p, g)? {
        return Err(ComplexError::NotCocycle);
    }
    is_coboundary(p, &f.sub(g))
}

/// Representatives of a basis of HH^n, each homogeneous in internal degree.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    pub degree: usize,
    pub classes: Vec<Cochain>,
    pub internal_degrees: Vec<Degree>,
    boundaries: Vec<SparseVec>,
    field: Field,
}

impl CohomologyBasis {
    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    /// Coordinates of a cocycle's class on `classes`.
    pub fn coordinates(&self, f: &Cochain) -> Option<Vec<Scalar>> {
        let mut ech = Echelon::new(self.field);
        for b in &self.boundaries {
            ech.insert(b.clone());
        }
        let nb = self.boundaries.len();
        for c in &self.classes {
            ech.insert(c.to_sparse());
        }
        let x = ech.solve(&f.to_sparse())?;
        Some(
            (0..self.classes.len())
                .map(|i| x.get(&(nb + i)).cloned().unwrap_or_else(|| self.field.zero()))
                .collect(),
        )
    }
}

/// Basis of HH^n computed per internal degree, so every representative is
/// homogeneous; ordering is by internal degree, then pivot order.
pub fn cohomology_basis(p: &FreeBimoduleComplex, n: usize) -> Result<CohomologyBasis, ComplexError> {
    if n + 1 > p.length() {
        return Err(ComplexError::NeedsNextDegree(n));
    }
    let field = p.field();
    let dim = p.algebra().dim();
    let delta_n = coboundary_columns(p, n);
    let delta_prev = if n == 0 { Vec::new() } else { coboundary_columns(p, n - 1) };

    let mut by_degree: BTreeMap<Degree, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for k in 0..p.rank(n) * dim {
        let v = basis_cochain_degree(p, n, k / dim, k % dim);
        by_degree.entry(v).or_default().0.push(k);
    }
    if n > 0 {
        for k in 0..p.rank(n - 1) * dim {
            let v = basis_cochain_degree(p, n - 1, k / dim, k % dim);
            if let Some(e) = by_degree.get_mut(&v) {
                e.1.push(k);
            }
        }
    }

    let mut classes = Vec::new();
    let mut internal_degrees = Vec::new();
    let mut boundaries = Vec::new();
    for (v, (cols, prev_cols)) in by_degree {
        let cycles = Echelon::from_columns(field, cols.iter().map(|&k| delta_n[k].clone()));
        let mut quotient = Echelon::new(field);
        for &k in &prev_cols {
            let b = delta_prev[k].clone();
            if quotient.insert(b.clone()) {
                boundaries.push(b);
            }
        }
        for z in cycles.kernel() {
            let global: SparseVec = z.iter().map(|(&i, c)| (cols[i], c.clone())).collect();
            if quotient.insert(global.clone()) {
                classes.push(Cochain::from_sparse(p, n, &global));
                internal_degrees.push(v.clone());
            }
        }
    }
    Ok(CohomologyBasis { degree: n, classes, internal_degrees, boundaries, field })
}
