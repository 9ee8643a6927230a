use std::collections::HashMap;
use std::sync::Arc;

use super::LiftError;
use crate::algebra::{AlgebraElement, GradedAlgebra};
use crate::complexes::{act_basis, differential_columns, FreeBimoduleComplex, FreeElement};
use crate::foundations::Degree;
use crate::linalg::{Echelon, SparseVec};

/// A bimodule map P_n → T_{n+shift}, given by generator images for n in
/// `start..images.len()`; components below `start` are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub shift: isize,
    pub start: usize,
    /// `images[n][g]`; empty for n < start.
    pub images: Vec<Vec<FreeElement>>,
}

impl ChainMap {
    /// Highest source degree covered.
    pub fn top(&self) -> usize {
        self.images.len().saturating_sub(1)
    }

    pub fn covers(&self, n: usize) -> bool {
        n < self.images.len()
    }

    pub fn image(&self, n: usize, g: usize) -> Option<&FreeElement> {
        if n < self.start {
            return None;
        }
        self.images.get(n)?.get(g)
    }

    /// Σ c · b_l φ(e_g) b_r; zero below `start`.
    pub fn apply(&self, algebra: &GradedAlgebra, n: usize, x: &FreeElement) -> FreeElement {
        let mut out = FreeElement::new();
        if n < self.start {
            return out;
        }
        assert!(self.covers(n), "chain map not computed in degree {n}");
        for ((g, l, r), c) in x.terms() {
            out.add_scaled(&act_basis(algebra, l, &self.images[n][g], r), c);
        }
        out
    }

    /// Source degrees n ≥ 1 (with n ≤ top) where d∘φ_n ≠ φ_{n−1}∘d, for a
    /// shift-0 map; degree 0 is checked against `base` through the augmentations.
    pub fn chain_map_failures(
        &self,
        source: &FreeBimoduleComplex,
        target: &FreeBimoduleComplex,
        base: &[AlgebraElement],
    ) -> Vec<usize> {
        assert_eq!(self.shift, 0, "chain-map check needs shift 0");
        let alg = target.algebra();
        let mut failures = Vec::new();
        if self.covers(0) {
            let ok = (0..source.rank(0)).all(|g| target.augment(&self.images[0][g]) == base[g]);
            if !ok {
                failures.push(0);
            }
        }
        for n in 1..=self.top().min(source.length()).min(target.length()) {
            let ok = (0..source.rank(n)).all(|g| {
                let lhs = target.apply_d(n, &self.images[n][g]);
                let rhs = self.apply(alg, n - 1, source.differential(n, g));
                lhs == rhs
            });
            if !ok {
                failures.push(n);
            }
        }
        failures
    }

    /// φ∘χ for composable maps (`self` applied second).
    pub fn compose(&self, algebra: &GradedAlgebra, first: &ChainMap) -> ChainMap {
        let top = first.top().min((self.top() as isize - first.shift).max(0) as usize);
        let mut images = vec![Vec::new(); top + 1];
        let start = first.start.max((self.start as isize - first.shift).max(0) as usize);
        for (n, slot) in images.iter_mut().enumerate().skip(start) {
            let m = (n as isize + first.shift) as usize;
            *slot = first.images[n].iter().map(|x| self.apply(algebra, m, x)).collect();
        }
        ChainMap { shift: self.shift + first.shift, start, images }
    }
}

/// What φ_0 must induce on augmentations: μ_T(φ_0(e_g)) = value[g].
#[derive(Clone, Debug)]
pub enum BaseMap {
    /// The identity of A: μ_T φ_0 = μ_S.
    Identity,
    Values(Vec<AlgebraElement>),
}

/// Columns of the k-linear map restricted to the k-basis elements of one internal
/// degree, cached per degree.
pub(crate) struct GradedSolver<'a> {
    complex: &'a FreeBimoduleComplex,
    degree: usize,
    columns: Vec<SparseVec>,
    cache: HashMap<Degree, (Echelon, Vec<usize>)>,
    all: Option<Echelon>,
}

impl<'a> GradedSolver<'a> {
    /// Solver for x ∈ P_degree given the image of x: `columns[k]` is the image of the
    /// k-th basis element `(g·d + l)·d + r`.
    pub(crate) fn new(complex: &'a FreeBimoduleComplex, degree: usize, columns: Vec<SparseVec>) -> Self {
        GradedSolver { complex, degree, columns, cache: HashMap::new(), all: None }
    }

    fn basis_degree(&self, k: usize) -> Degree {
        let d = self.complex.algebra().dim();
        self.complex.term_degree(self.degree, (k / (d * d), (k / d) % d, k % d))
    }

    /// x of internal degree `v` (or of any degree when `v` is None) whose image is `b`.
    pub(crate) fn solve(&mut self, v: Option<&Degree>, b: &SparseVec) -> Option<FreeElement> {
        let field = self.complex.field();
        let dim = self.complex.algebra().dim();
        match v {
            Some(v) => {
                if !self.cache.contains_key(v) {
                    let idx: Vec<usize> = (0..self.columns.len()).filter(|&k| self.basis_degree(k) == *v).collect();
                    let ech = Echelon::from_columns(field, idx.iter().map(|&k| self.columns[k].clone()));
                    self.cache.insert(v.clone(), (ech, idx));
                }
                let (ech, idx) = &self.cache[v];
                let x = ech.solve(b)?;
                let global: SparseVec = x.into_iter().map(|(i, c)| (idx[i], c)).collect();
                Some(FreeElement::from_sparse(&global, dim))
            }
            None => {
                if self.all.is_none() {
                    self.all = Some(Echelon::from_columns(field, self.columns.iter().cloned()));
                }
                let x = self.all.as_ref().expect("just built").solve(b)?;
                Some(FreeElement::from_sparse(&x, dim))
            }
        }
    }
}

/// Comparison-theorem lift of `base` to a chain map `source → target` in degrees
/// ≤ `up_to`. Each φ_n(e_g) is sought in the internal degree of e_g first, so maps
/// between graded resolutions come out homogeneous.
pub fn lift_chain_map(
    source: &FreeBimoduleComplex,
    target: &FreeBimoduleComplex,
    base: BaseMap,
    up_to: usize,
) -> Result<ChainMap, LiftError> {
    if !Arc::ptr_eq(source.algebra(), target.algebra()) && source.algebra() != target.algebra() {
        return Err(LiftError::AlgebraMismatch);
    }
    if up_to > source.length() || up_to > target.length() {
        return Err(LiftError::BeyondTruncation(up_to));
    }
    let base = match base {
        BaseMap::Identity => source.augmentation().to_vec(),
        BaseMap::Values(v) => v,
    };
    let dim = target.algebra().dim();
    let mut images: Vec<Vec<FreeElement>> = Vec::with_capacity(up_to + 1);

    let aug_cols: Vec<SparseVec> = {
        let mut cols = Vec::with_capacity(target.k_dim(0));
        for h in 0..target.rank(0) {
            for l in 0..dim {
                for r in 0..dim {
                    let mut x = FreeElement::new();
                    x.add_term(h, l, r, target.field().one());
                    cols.push(target.augment(&x).support().map(|(i, c)| (i, c.clone())).collect());
                }
            }
        }
        cols
    };
    let mut solver = GradedSolver::new(target, 0, aug_cols);
    let mut row = Vec::with_capacity(source.rank(0));
    for g in 0..source.rank(0) {
        let b: SparseVec = base[g].support().map(|(i, c)| (i, c.clone())).collect();
        let x = solver
            .solve(Some(source.gen_degree(0, g)), &b)
            .or_else(|| solver.solve(None, &b))
            .ok_or(LiftError::Inconsistent { degree: 0 })?;
        row.push(x);
    }
    images.push(row);

    for n in 1..=up_to {
        let mut solver = GradedSolver::new(target, n, differential_columns(target, n));
        let mut row = Vec::with_capacity(source.rank(n));
        for g in 0..source.rank(n) {
            let mut rhs = FreeElement::new();
            for ((h, l, r), c) in source.differential(n, g).terms() {
                rhs.add_scaled(&act_basis(target.algebra(), l, &images[n - 1][h], r), c);
            }
            let b = rhs.to_sparse(dim);
            let x = solver
                .solve(Some(source.gen_degree(n, g)), &b)
                .or_else(|| solver.solve(None, &b))
                .ok_or(LiftError::Inconsistent { degree: n })?;
            row.push(x);
        }
        images.push(row);
    }
    Ok(ChainMap { shift: 0, start: 0, images })
}
