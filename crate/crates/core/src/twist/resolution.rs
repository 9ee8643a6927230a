use std::sync::Arc;

use super::{SigmaMaps, TwistError, TwistedTotal};
use crate::complexes::{Cochain, FreeElement, TensorSquare};
use crate::foundations::{koszul_sign, Bicharacter, Scalar};
use crate::lifting::{ChainMap, Resolution};

/// P⊗ᵗQ with its σ-built diagonal and the companion ψ_{P⊗ᵗQ}.
#[derive(Debug)]
pub struct TwistedTensorResolution {
    left: Arc<Resolution>,
    right: Arc<Resolution>,
    total: TwistedTotal,
    sigma: SigmaMaps,
    resolution: Resolution,
}

/// Builds P⊗ᵗQ, Δ_{P⊗ᵗQ} = σ⁻¹(Δ_P ⊗ᵗ Δ_Q) and ψ_{P⊗ᵗQ}.
///
/// Both factors must start with P_0 = A⊗A on a generator of degree 0 with
/// μ(e_0) = 1. [`TwistedTotal`] itself accepts any free factors.
pub fn twisted_tensor_resolution(
    left: Arc<Resolution>,
    right: Arc<Resolution>,
    t: Bicharacter,
) -> Result<TwistedTensorResolution, TwistError> {
    if !left.complex().has_standard_start() {
        return Err(TwistError::NonStandardStart("left"));
    }
    if !right.complex().has_standard_start() {
        return Err(TwistError::NonStandardStart("right"));
    }
    let total = TwistedTotal::new(left.complex().clone(), right.complex().clone(), t)?;
    let square = TensorSquare::new(total.complex().clone(), total.length());
    let sigma = SigmaMaps::new(&total, &square, left.square(), right.square())?;
    let diagonal = twisted_diagonal(&total, &sigma, &left, &right);
    let companion = tensor_companion(&total, &left, &right)?;
    let resolution = Resolution::with_diagonal(total.complex().clone(), square, diagonal)?.with_companion(companion)?;
    Ok(TwistedTensorResolution { left, right, total, sigma, resolution })
}

impl TwistedTensorResolution {
    pub fn left(&self) -> &Arc<Resolution> {
        &self.left
    }

    pub fn right(&self) -> &Arc<Resolution> {
        &self.right
    }

    pub fn total(&self) -> &TwistedTotal {
        &self.total
    }

    pub fn sigma(&self) -> &SigmaMaps {
        &self.sigma
    }

    /// The total complex as a resolution of A⊗ᵗB.
    pub fn resolution(&self) -> &Resolution {
        &self.resolution
    }

    pub fn bicharacter(&self) -> &Bicharacter {
        self.total.bicharacter()
    }

    pub fn length(&self) -> usize {
        self.total.length()
    }
}

/// σ⁻¹ ∘ (Δ_P ⊗ᵗ Δ_Q), with (Δ_P⊗Δ_Q)(e⊗e′) = Δ_P(e) ⊗ Δ_Q(e′).
pub fn twisted_diagonal(total: &TwistedTotal, sigma: &SigmaMaps, left: &Resolution, right: &Resolution) -> ChainMap {
    let top = total.length().min(left.diagonal().top()).min(right.diagonal().top());
    let images = (0..=top)
        .map(|n| {
            total
                .gens(n)
                .iter()
                .map(|x| {
                    let j = n - x.i;
                    sigma.outer.tensor(x.i, &left.diagonal().images[x.i][x.g], j, &right.diagonal().images[j][x.h])
                })
                .collect()
        })
        .collect();
    let product = ChainMap { shift: 0, start: 0, images };
    sigma.sigma_inv.compose(total.algebra(), &product)
}

/// (φ ⊗ χ)(e_g ⊗ e′_h) = (−1)^{|χ| i} φ(e_g) ⊗ χ(e′_h) for generators of total
/// degree n, where φ and χ return their images together with target degrees.
pub(crate) fn tensor_maps(
    total: &TwistedTotal,
    n: usize,
    chi_parity: i64,
    scale: &Scalar,
    phi: impl Fn(usize, usize) -> Option<(usize, FreeElement)>,
    chi: impl Fn(usize, usize) -> Option<(usize, FreeElement)>,
) -> Vec<FreeElement> {
    let field = total.algebra().field();
    total
        .gens(n)
        .iter()
        .map(|x| {
            let j = n - x.i;
            match (phi(x.i, x.g), chi(j, x.h)) {
                (Some((a, u)), Some((b, v))) if !u.is_zero() && !v.is_zero() => {
                    let sign = koszul_sign(field, chi_parity, x.i as i64);
                    total.tensor(a, &u, b, &v).scaled(&(&sign * scale))
                }
                _ => FreeElement::new(),
            }
        })
        .collect()
}

/// ψ_{P⊗ᵗQ} = ψ_P ⊗ (μ_Q⊗1)Δ_Q + (1⊗μ_P)Δ_P ⊗ ψ_Q.
fn tensor_companion(total: &TwistedTotal, left: &Resolution, right: &Resolution) -> Result<ChainMap, TwistError> {
    let (psi_p, psi_q) = (left.companion()?, right.companion()?);
    let (mu_p, mu_q) = (Cochain::augmentation(left.complex()), Cochain::augmentation(right.complex()));
    let top = total.length().saturating_sub(1);
    let one = total.algebra().field().one();
    let images = (0..=top)
        .map(|n| {
            let first = tensor_maps(
                total,
                n,
                0,
                &one,
                |i, g| Some((i + 1, psi_p.images[i][g].clone())),
                |j, h| Some((j, right.square().apply_left(&mu_q, j, &right.diagonal().images[j][h]))),
            );
            let second = tensor_maps(
                total,
                n,
                1,
                &one,
                |i, g| Some((i, left.square().apply_right(&mu_p, i, &left.diagonal().images[i][g]))),
                |j, h| Some((j + 1, psi_q.images[j][h].clone())),
            );
            first
                .into_iter()
                .zip(second)
                .map(|(mut a, b)| {
                    a.add(&b);
                    a
                })
                .collect()
        })
        .collect();
    Ok(ChainMap { shift: 1, start: 0, images })
}
