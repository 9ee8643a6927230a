use super::resolution::tensor_maps;
use super::{tensor_cochain, Side, TwistError, TwistedTensorResolution};
use crate::complexes::{is_coboundary, Cochain, FreeElement};
use crate::foundations::koszul_sign;
use crate::lifting::{second_condition_cochain, verify_homotopy_lifting, ChainMap, HomotopyLifting};

/// ψ_{f⊗ᵗg} = ψ_f ⊗ (1⊗g)Δ_Q + (−1)^m (f⊗1)Δ_P ⊗ ψ_g.
///
/// The factor liftings must satisfy the lifting equation; the second condition
/// of the result is evaluated against ψ_{P⊗ᵗQ}. The t^{−⟨|e| , u⟩} factors of
/// the two map tensors are 1 because u lies in G′.
pub fn tensor_homotopy_lifting(
    tt: &TwistedTensorResolution,
    f: &Cochain,
    psi_f: &ChainMap,
    g: &Cochain,
    psi_g: &ChainMap,
) -> Result<HomotopyLifting, TwistError> {
    let (pres, qres) = (tt.left(), tt.right());
    if !verify_homotopy_lifting(pres, f, psi_f, true).passed() {
        return Err(TwistError::UnverifiedLifting(Side::Left));
    }
    if !verify_homotopy_lifting(qres, g, psi_g, true).passed() {
        return Err(TwistError::UnverifiedLifting(Side::Right));
    }
    let total = tt.total();
    let fg = tensor_cochain(total, f, g)?;
    let (m, n) = (f.degree(), g.degree());
    let res = tt.resolution();
    let top = res.lifting_top(m + n);
    if !psi_f.covers(top) || !psi_g.covers(top) {
        return Err(TwistError::BeyondTruncation(top));
    }
    let start = m + n - 1;
    let sign_m = koszul_sign(total.algebra().field(), m as i64, 1);
    let one = total.algebra().field().one();
    let (ps, qs) = (pres.square(), qres.square());
    let (dp, dq) = (pres.diagonal(), qres.diagonal());

    let mut images = vec![Vec::new(); top + 1];
    for (nn, slot) in images.iter_mut().enumerate().skip(start) {
        let first = tensor_maps(
            total,
            nn,
            n as i64,
            &one,
            |i, e| psi_f.image(i, e).map(|x| (i + 1 - m, x.clone())),
            |j, e| (j >= n).then(|| (j - n, qs.apply_right(g, j, &dq.images[j][e]))),
        );
        let second = tensor_maps(
            total,
            nn,
            n as i64 + 1,
            &sign_m,
            |i, e| (i >= m).then(|| (i - m, ps.apply_left(f, i, &dp.images[i][e]))),
            |j, e| psi_g.image(j, e).map(|y| (j + 1 - n, y.clone())),
        );
        *slot = first
            .into_iter()
            .zip(second)
            .map(|(mut a, b): (FreeElement, FreeElement)| {
                a.add(&b);
                a
            })
            .collect();
    }
    let map = ChainMap { shift: 1 - (m + n) as isize, start, images };
    let c = second_condition_cochain(res, &fg.cochain, &map)?;
    let second_condition = is_coboundary(res.complex(), &c)?;
    Ok(HomotopyLifting { cocycle: fg.cochain, map, second_condition })
}
