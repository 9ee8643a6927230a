use super::{ChainMap, LiftError, Resolution};
use crate::complexes::Cochain;
use crate::foundations::koszul_sign;

/// f ⌣ f′ = (f′⊗f)Δ, a cochain of degree m + m′.
pub fn cup(res: &Resolution, f: &Cochain, f2: &Cochain) -> Result<Cochain, LiftError> {
    let p = res.complex();
    let n = f.degree() + f2.degree();
    if n > p.length() || !res.diagonal().covers(n) {
        return Err(LiftError::BeyondTruncation(n));
    }
    let values = (0..p.rank(n))
        .map(|g| res.square().apply_pair(f2, f, n, &res.diagonal().images[n][g]))
        .collect();
    Ok(Cochain::new(n, values))
}

/// [f, g] = fψ_g − (−1)^{(m−1)(n−1)} gψ_f, of degree m + n − 1.
pub fn bracket(res: &Resolution, f: &Cochain, psi_f: &ChainMap, g: &Cochain, psi_g: &ChainMap) -> Result<Cochain, LiftError> {
    let p = res.complex();
    let (m, n) = (f.degree(), g.degree());
    if m == 0 || n == 0 {
        return Err(LiftError::DegreeZero);
    }
    let d = m + n - 1;
    if d > p.length() || !psi_f.covers(d) || !psi_g.covers(d) {
        return Err(LiftError::BeyondTruncation(d));
    }
    let alg = p.algebra();
    let sign = koszul_sign(p.field(), m as i64 - 1, n as i64 - 1);
    let values = (0..p.rank(d))
        .map(|e| {
            let x = p.generator(e);
            let a = f.evaluate(p, &psi_g.apply(alg, d, &x));
            let b = g.evaluate(p, &psi_f.apply(alg, d, &x));
            a.sub(&b.scale(&sign))
        })
        .collect();
    Ok(Cochain::new(d, values))
}
