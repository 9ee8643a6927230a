use std::fmt;

use super::{act_basis, ComplexError, FreeBimoduleComplex};
use crate::linalg::{Echelon, SparseVec};

/// A free bimodule complex written out over k on the basis b_l e_g b_r.
#[derive(Clone, Debug)]
pub struct KLinearComplex {
    /// k-dimension of each degree.
    pub dims: Vec<usize>,
    /// `matrices[n]` holds the columns of d_n (empty at n = 0).
    pub matrices: Vec<Vec<SparseVec>>,
    /// Columns of μ: P_0 → A.
    pub augmentation: Vec<SparseVec>,
    pub algebra_dim: usize,
}

pub fn expand_to_k_complex(p: &FreeBimoduleComplex) -> KLinearComplex {
    let dims: Vec<usize> = (0..=p.length()).map(|n| p.k_dim(n)).collect();
    let mut matrices = vec![Vec::new()];
    for n in 1..=p.length() {
        matrices.push(differential_columns(p, n));
    }
    KLinearComplex {
        dims,
        matrices,
        augmentation: augmentation_columns(p),
        algebra_dim: p.algebra().dim(),
    }
}

/// Columns of d_n on the k-basis, indexed `(g·d + l)·d + r`.
pub fn differential_columns(p: &FreeBimoduleComplex, n: usize) -> Vec<SparseVec> {
    let alg = p.algebra();
    let dim = alg.dim();
    let mut cols = Vec::with_capacity(p.k_dim(n));
    for g in 0..p.rank(n) {
        for l in 0..dim {
            for r in 0..dim {
                cols.push(act_basis(alg, l, p.differential(n, g), r).to_sparse(dim));
            }
        }
    }
    cols
}

fn augmentation_columns(p: &FreeBimoduleComplex) -> Vec<SparseVec> {
    let dim = p.algebra().dim();
    let mut cols = Vec::with_capacity(p.k_dim(0));
    for g in 0..p.rank(0) {
        for l in 0..dim {
            for r in 0..dim {
                let mut x = super::FreeElement::new();
                x.add_term(g, l, r, p.field().one());
                let v = p.augment(&x);
                cols.push(v.support().map(|(i, c)| (i, c.clone())).collect());
            }
        }
    }
    cols
}

impl KLinearComplex {
    /// True if every pair of consecutive maps (including μ∘d_1) composes to zero.
    pub fn composes_to_zero(&self) -> bool {
        let compose = |outer: &[SparseVec], inner: &[SparseVec]| {
            inner.iter().all(|col| {
                let mut acc = SparseVec::new();
                for (&k, c) in col {
                    crate::linalg::add_scaled(&mut acc, &outer[k], c);
                }
                acc.is_empty()
            })
        };
        if self.matrices.len() > 1 && !compose(&self.augmentation, &self.matrices[1]) {
            return false;
        }
        (2..self.matrices.len()).all(|n| compose(&self.matrices[n - 1], &self.matrices[n]))
    }
}

/// Homology dimensions of a truncated resolution, computed from k-linear ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub up_to: usize,
    /// `homology[0]` is dim P_0/im d_1 (should equal dim A); `homology[n]` is dim H_n.
    pub homology: Vec<usize>,
    pub augmentation_rank: usize,
    pub algebra_dim: usize,
    pub d_squared_zero: bool,
}

impl ExactnessReport {
    pub fn exact(&self) -> bool {
        self.d_squared_zero
            && self.augmentation_rank == self.algebra_dim
            && self.homology[0] == self.algebra_dim
            && self.homology[1..].iter().all(|&h| h == 0)
    }
}

impl fmt::Display for ExactnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.homology.iter().map(|h| h.to_string()).collect();
        write!(
            f,
            "{} up to degree {}: H = ({}), rank mu = {}/{}",
            if self.exact() { "exact" } else { "NOT exact" },
            self.up_to,
            dims.join(","),
            self.augmentation_rank,
            self.algebra_dim
        )
    }
}

/// Certifies that `p` resolves A in degrees ≤ `up_to`, which must be below the
/// truncation length.
pub fn verify_exactness(p: &FreeBimoduleComplex, up_to: usize) -> Result<ExactnessReport, ComplexError> {
    if up_to >= p.length() {
        return Err(ComplexError::NeedsNextDegree(up_to));
    }
    let field = p.field();
    let mut matrices = vec![Vec::new()];
    for n in 1..=up_to + 1 {
        matrices.push(differential_columns(p, n));
    }
    let k = KLinearComplex {
        dims: (0..=up_to + 1).map(|n| p.k_dim(n)).collect(),
        matrices,
        augmentation: augmentation_columns(p),
        algebra_dim: p.algebra().dim(),
    };
    let rank = |cols: &[SparseVec]| Echelon::from_columns(field, cols.iter().cloned()).rank();
    let ranks: Vec<usize> = (0..=up_to + 1).map(|n| if n == 0 { 0 } else { rank(&k.matrices[n]) }).collect();
    let mut homology = vec![k.dims[0] - ranks[1]];
    for n in 1..=up_to {
        homology.push(k.dims[n] - ranks[n] - ranks[n + 1]);
    }
    Ok(ExactnessReport {
        up_to,
        homology,
        augmentation_rank: rank(&k.augmentation),
        algebra_dim: k.algebra_dim,
        d_squared_zero: k.composes_to_zero(),
    })
}
