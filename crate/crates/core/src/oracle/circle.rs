use super::bar::{decode, encode};
use super::{BarComplex, OracleError};
use crate::complexes::Cochain;

/// f∘g = Σ_{i=1}^{m} (−1)^{(i−1)(n−1)} f(r_1, …, g(r_i, …, r_{i+n−1}), …), a bar
/// cochain of degree m + n − 1.
pub fn circle_product(bar: &BarComplex, f: &Cochain, g: &Cochain) -> Result<Cochain, OracleError> {
    let (m, n) = (f.degree(), g.degree());
    let alg = bar.algebra();
    let dim = alg.dim();
    let p = bar.complex();
    if f.values().len() != p.rank(m) || g.values().len() != p.rank(n) {
        return Err(OracleError::Mismatch);
    }
    if m == 0 {
        let top = n.checked_sub(1).ok_or(OracleError::BeyondTruncation(0))?;
        return Ok(Cochain::zero(p, top));
    }
    let out_deg = m + n - 1;
    if out_deg > bar.truncation() {
        return Err(OracleError::BeyondTruncation(out_deg));
    }
    let field = alg.field();
    let values = (0..p.rank(out_deg))
        .map(|k| {
            let t = decode(dim, out_deg, k);
            let mut acc = alg.zero();
            for i in 0..m {
                let inner = g.value(encode(dim, &t[i..i + n]));
                let sign = if i * (n + 1) % 2 == 0 { field.one() } else { -field.one() };
                for (b, c) in inner.support() {
                    let mut outer = t[..i].to_vec();
                    outer.push(b);
                    outer.extend_from_slice(&t[i + n..]);
                    acc = acc.add(&f.value(encode(dim, &outer)).scale(&(c * &sign)));
                }
            }
            acc
        })
        .collect();
    Ok(Cochain::new(out_deg, values))
}

/// [f, g] = f∘g − (−1)^{(m−1)(n−1)} g∘f.
pub fn circle_bracket(bar: &BarComplex, f: &Cochain, g: &Cochain) -> Result<Cochain, OracleError> {
    let (m, n) = (f.degree(), g.degree());
    let fg = circle_product(bar, f, g)?;
    let gf = circle_product(bar, g, f)?;
    let odd = m > 0 && n > 0 && (m - 1) * (n - 1) % 2 == 1;
    Ok(if odd { fg.add(&gf) } else { fg.sub(&gf) })
}
