use std::sync::Arc;

use super::{ComplexError, ComplexKind, FreeBimoduleComplex, FreeElement};
use crate::algebra::{truncated_polynomial, GradedAlgebra};
use crate::foundations::{Field, GradingGroup};

/// The 2-periodic resolution of k[x]/(x^N) (ℤ-graded, |x| = 1, label `x`).
pub fn periodic_truncated_resolution(
    field: Field,
    n: usize,
    length: usize,
) -> Result<FreeBimoduleComplex, ComplexError> {
    let alg = truncated_polynomial(field, n, "x", GradingGroup::integers(), &[1])?;
    periodic_resolution(Arc::new(alg), n, length)
}

/// The periodic resolution over an algebra built by
/// [`truncated_polynomial`](crate::algebra::truncated_polynomial) (basis 1, x, …,
/// x^{N−1}; any grading of x).
///
/// d on odd generators is u = x⊗1 − 1⊗x, on even ones v = Σ_{i+j=N−1} x^i⊗x^j;
/// |e_{2j}| = jN|x| and |e_{2j+1}| = (jN+1)|x|.
pub fn periodic_resolution(
    algebra: Arc<GradedAlgebra>,
    n: usize,
    length: usize,
) -> Result<FreeBimoduleComplex, ComplexError> {
    if n < 2 || length < 1 {
        return Err(ComplexError::Shape("periodic resolution needs N ≥ 2 and length ≥ 1".into()));
    }
    if !is_truncated_polynomial(&algebra, n) {
        return Err(ComplexError::Shape("algebra is not k[x]/(x^N) on the basis 1, x, …".into()));
    }
    let field = algebra.field();
    let grp = algebra.group().clone();
    let x_deg = algebra.degree(1).clone();
    let one = field.one();

    let mut gen_degrees = Vec::with_capacity(length + 1);
    let mut differential = Vec::with_capacity(length + 1);
    for k in 0..=length {
        let j = (k / 2) as i64;
        let scale = if k % 2 == 0 { j * n as i64 } else { j * n as i64 + 1 };
        gen_degrees.push(vec![grp.scale(&x_deg, scale)]);
        let mut d = FreeElement::new();
        if k == 0 {
            differential.push(Vec::new());
            continue;
        }
        if k % 2 == 1 {
            d.add_term(0, 1, 0, one.clone());
            d.add_term(0, 0, 1, -one.clone());
        } else {
            for i in 0..n {
                d.add_term(0, i, n - 1 - i, one.clone());
            }
        }
        differential.push(vec![d]);
    }
    let augmentation = vec![algebra.one()];
    let p = FreeBimoduleComplex::new(algebra, gen_degrees, differential, augmentation)?
        .with_kind(ComplexKind::Periodic { n });
    let report = p.validate();
    assert!(report.passed(), "periodic resolution must be a homogeneous complex: {report}");
    Ok(p)
}

fn is_truncated_polynomial(a: &GradedAlgebra, n: usize) -> bool {
    if a.dim() != n || a.unit() != 0 {
        return false;
    }
    (0..n).all(|i| {
        let prod = a.mul_basis(1, i);
        if i + 1 < n {
            prod.len() == 1 && prod[0].0 == i + 1 && prod[0].1.is_one()
        } else {
            prod.is_empty()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{expand_to_k_complex, verify_exactness};

    #[test]
    fn k_dimensions_and_exactness() {
        let p = periodic_truncated_resolution(Field::Rational, 2, 6).unwrap();
        let k = expand_to_k_complex(&p);
        assert!(k.dims.iter().all(|&d| d == 4));
        assert!(k.composes_to_zero());
        let r = verify_exactness(&p, 5).unwrap();
        assert!(r.exact(), "{r}");
        let p3 = periodic_truncated_resolution(Field::Rational, 3, 6).unwrap();
        assert!(verify_exactness(&p3, 5).unwrap().exact());
        assert!(verify_exactness(&p3, 6).is_err());
    }

    #[test]
    fn degrees_follow_n() {
        let p = periodic_truncated_resolution(Field::Rational, 3, 5).unwrap();
        let degs: Vec<i64> = (0..=5).map(|k| p.gen_degree(k, 0).0[0]).collect();
        assert_eq!(degs, vec![0, 1, 3, 4, 6, 7]);
    }
}
