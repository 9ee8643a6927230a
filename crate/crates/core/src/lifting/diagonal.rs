use std::sync::{Arc, OnceLock};

use super::homotopy::residuals;
use super::{lift_chain_map, solve_lifting_equation, BaseMap, ChainMap, LiftError};
use crate::complexes::{Cochain, ComplexKind, FreeBimoduleComplex, TensorSquare, TensorSquareGen};

/// A resolution P together with P ⊗_A P and a diagonal Δ: P → P ⊗_A P.
///
/// The companion ψ_P with d(ψ_P) = (μ⊗1 − 1⊗μ)Δ is solved on first use and
/// cached.
#[derive(Debug)]
pub struct Resolution {
    complex: Arc<FreeBimoduleComplex>,
    square: TensorSquare,
    diagonal: ChainMap,
    companion: OnceLock<Result<ChainMap, LiftError>>,
}

impl Resolution {
    /// Uses a diagonal supplied by the caller after checking it is a chain map.
    pub fn with_diagonal(
        complex: Arc<FreeBimoduleComplex>,
        square: TensorSquare,
        diagonal: ChainMap,
    ) -> Result<Self, LiftError> {
        if !Arc::ptr_eq(square.base(), &complex) && **square.base() != *complex {
            return Err(LiftError::AlgebraMismatch);
        }
        let failures = diagonal.chain_map_failures(&complex, square.complex(), complex.augmentation());
        if let Some(&degree) = failures.first() {
            return Err(LiftError::NotAChainMap { degree });
        }
        Ok(Resolution { complex, square, diagonal, companion: OnceLock::new() })
    }

    /// Closed-form diagonal for the N = 2 periodic resolution, a lifted one
    /// otherwise.
    pub fn new(complex: Arc<FreeBimoduleComplex>) -> Result<Self, LiftError> {
        let len = complex.length();
        let square = TensorSquare::new(complex.clone(), len);
        let diagonal = diagonal_periodic(&complex, &square)?;
        Ok(Resolution { complex, square, diagonal, companion: OnceLock::new() })
    }

    pub fn complex(&self) -> &Arc<FreeBimoduleComplex> {
        &self.complex
    }

    pub fn square(&self) -> &TensorSquare {
        &self.square
    }

    pub fn diagonal(&self) -> &ChainMap {
        &self.diagonal
    }

    /// ψ_P, the degree-0 lifting of the augmentation.
    pub fn companion(&self) -> Result<&ChainMap, LiftError> {
        self.companion
            .get_or_init(|| solve_lifting_equation(self, &Cochain::augmentation(&self.complex)))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Installs a companion supplied by the caller after checking
    /// d ψ + ψ d = (μ⊗1 − 1⊗μ)Δ in every degree it covers.
    pub fn with_companion(self, companion: ChainMap) -> Result<Self, LiftError> {
        let mu = Cochain::augmentation(&self.complex);
        if companion.shift != 1 || companion.start != 0 {
            return Err(LiftError::NotAChainMap { degree: 0 });
        }
        let top = companion.top().min(self.lifting_top(0));
        if let Some(r) = residuals(&self, &mu, &companion, 0, top).first() {
            return Err(LiftError::Inconsistent { degree: r.degree });
        }
        let cell = OnceLock::new();
        let _ = cell.set(Ok(companion));
        Ok(Resolution { companion: cell, ..self })
    }

    /// Highest degree in which ψ_f for f of degree m is available.
    pub fn lifting_top(&self, m: usize) -> usize {
        let len = self.complex.length().min(self.diagonal.top());
        (len + m).saturating_sub(1).min(len)
    }
}

/// Δ(e_i) = Σ_{j+l=i} e_j ⊗ e_l for k[x]/(x²), the deconcatenation
/// [a_1|…|a_n] ↦ Σ_j [a_1|…|a_j] ⊗ [a_{j+1}|…|a_n] for bar complexes; lifted
/// through the comparison theorem for every other complex.
pub fn diagonal_periodic(p: &FreeBimoduleComplex, square: &TensorSquare) -> Result<ChainMap, LiftError> {
    let top = square.length();
    if *p.kind() == (ComplexKind::Periodic { n: 2 }) {
        let unit = p.algebra().unit();
        let images = (0..=top)
            .map(|i| {
                let mut x = crate::complexes::FreeElement::new();
                for j in 0..=i {
                    let t = TensorSquareGen { j, g: 0, mid: unit, h: 0 };
                    x.add(&square.element(i, t));
                }
                vec![x]
            })
            .collect();
        return Ok(ChainMap { shift: 0, start: 0, images });
    }
    if *p.kind() == ComplexKind::Bar {
        if let Some(d) = deconcatenation(p, square) {
            return Ok(d);
        }
    }
    lift_chain_map(p, square.complex(), BaseMap::Identity, top)
}

/// None unless the generators of P_n are numbered like bar tuples (base dim A,
/// first entry most significant) and the result is a chain map.
fn deconcatenation(p: &FreeBimoduleComplex, square: &TensorSquare) -> Option<ChainMap> {
    let dim = p.algebra().dim();
    let unit = p.algebra().unit();
    let top = square.length();
    if (0..=top).any(|n| Some(p.rank(n)) != dim.checked_pow(n as u32)) {
        return None;
    }
    let images = (0..=top)
        .map(|n| {
            (0..p.rank(n))
                .map(|g| {
                    let mut x = crate::complexes::FreeElement::new();
                    for j in 0..=n {
                        let split = dim.pow((n - j) as u32);
                        let t = TensorSquareGen { j, g: g / split, mid: unit, h: g % split };
                        x.add(&square.element(n, t));
                    }
                    x
                })
                .collect()
        })
        .collect();
    let d = ChainMap { shift: 0, start: 0, images };
    d.chain_map_failures(p, square.complex(), p.augmentation()).is_empty().then_some(d)
}
