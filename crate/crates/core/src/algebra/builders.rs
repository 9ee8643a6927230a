//! Multiplication tables for standard small algebras.

use super::{AlgebraError, GradedAlgebra};
use crate::foundations::{Field, GradingGroup, Scalar};

type Table = Vec<Vec<Vec<(usize, Scalar)>>>;

/// k[x]/(x^N) on the basis 1, x, …, x^{N−1}, with |x| given in `group`.
pub fn truncated_polynomial(
    field: Field,
    n: usize,
    label: &str,
    group: GradingGroup,
    x_degree: &[i64],
) -> Result<GradedAlgebra, AlgebraError> {
    assert!(n >= 1, "k[x]/(x^N) needs N ≥ 1");
    let xd = group.element(x_degree)?;
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => label.to_string(),
            _ => format!("{label}^{i}"),
        })
        .collect();
    let degrees = (0..n).map(|i| group.scale(&xd, i as i64)).collect();
    let table: Table = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i + j < n { vec![(i + j, field.one())] } else { vec![] })
                .collect()
        })
        .collect();
    GradedAlgebra::new(field, group, labels, degrees, 0, table)
}

/// The ground field as a one-dimensional algebra.
pub fn ground_field(field: Field, group: GradingGroup) -> GradedAlgebra {
    let zero = group.zero();
    GradedAlgebra::new(
        field,
        group,
        vec!["1".into()],
        vec![zero],
        0,
        vec![vec![vec![(0, field.one())]]],
    )
    .expect("ground field table is well formed")
}

/// k ⊕ V with V·V = 0; `labels`/`degrees` describe a basis of V.
pub fn square_zero(
    field: Field,
    group: GradingGroup,
    labels: &[&str],
    degrees: &[Vec<i64>],
) -> Result<GradedAlgebra, AlgebraError> {
    let n = labels.len() + 1;
    let mut all_labels = vec!["1".to_string()];
    all_labels.extend(labels.iter().map(|s| s.to_string()));
    let mut all_degrees = vec![group.zero()];
    for d in degrees {
        all_degrees.push(group.element(d)?);
    }
    let table: Table = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i, j) {
                    (0, j) => vec![(j, field.one())],
                    (i, 0) => vec![(i, field.one())],
                    _ => vec![],
                })
                .collect()
        })
        .collect();
    GradedAlgebra::new(field, group, all_labels, all_degrees, 0, table)
}

/// Upper triangular 2×2 matrices on the basis `1`, `e = E11`, `a = E12`.
pub fn upper_triangular(
    field: Field,
    group: GradingGroup,
    arrow_degree: &[i64],
) -> Result<GradedAlgebra, AlgebraError> {
    let one = field.one();
    let ad = group.element(arrow_degree)?;
    let table: Table = vec![
        vec![vec![(0, one.clone())], vec![(1, one.clone())], vec![(2, one.clone())]],
        vec![vec![(1, one.clone())], vec![(1, one.clone())], vec![(2, one.clone())]],
        vec![vec![(2, one.clone())], vec![], vec![]],
    ];
    GradedAlgebra::new(
        field,
        group.clone(),
        vec!["1".into(), "e".into(), "a".into()],
        vec![group.zero(), group.zero(), ad],
        0,
        table,
    )
}

/// The direct product A × B (same field and grading group).
///
/// Basis: the unit, the idempotent ε = (1, 0), then (a_i, 0) and (0, b_j) for the
/// non-unit basis elements of each factor.
pub fn direct_product(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<GradedAlgebra, AlgebraError> {
    if a.field() != b.field() {
        return Err(AlgebraError::FieldMismatch);
    }
    if a.group() != b.group() {
        return Err(AlgebraError::BicharacterDomain);
    }
    let field = a.field();
    let group = a.group().clone();
    let a_rest: Vec<usize> = (0..a.dim()).filter(|&i| i != a.unit()).collect();
    let b_rest: Vec<usize> = (0..b.dim()).filter(|&j| j != b.unit()).collect();
    let n = 2 + a_rest.len() + b_rest.len();

    // new basis index → (A-coordinates, B-coordinates) as dense vectors
    let mut vecs: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::with_capacity(n);
    let mut labels = vec!["1".to_string(), "eps".to_string()];
    let mut degrees = vec![group.zero(), group.zero()];
    let e = |dim: usize, i: usize| {
        let mut v = vec![field.zero(); dim];
        v[i] = field.one();
        v
    };
    vecs.push((e(a.dim(), a.unit()), e(b.dim(), b.unit())));
    vecs.push((e(a.dim(), a.unit()), vec![field.zero(); b.dim()]));
    for &i in &a_rest {
        vecs.push((e(a.dim(), i), vec![field.zero(); b.dim()]));
        labels.push(format!("{}_1", a.label(i)));
        degrees.push(a.degree(i).clone());
    }
    for &j in &b_rest {
        vecs.push((vec![field.zero(); a.dim()], e(b.dim(), j)));
        labels.push(format!("{}_2", b.label(j)));
        degrees.push(b.degree(j).clone());
    }

    // coordinates of (α, β) in the new basis
    let coords = |alpha: &[Scalar], beta: &[Scalar]| -> Vec<(usize, Scalar)> {
        let mut out = Vec::new();
        let bu = beta[b.unit()].clone();
        let au = alpha[a.unit()].clone();
        out.push((0, bu.clone()));
        out.push((1, &au - &bu));
        for (k, &i) in a_rest.iter().enumerate() {
            out.push((2 + k, alpha[i].clone()));
        }
        for (k, &j) in b_rest.iter().enumerate() {
            out.push((2 + a_rest.len() + k, beta[j].clone()));
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    };

    let mut table: Table = vec![vec![Vec::new(); n]; n];
    for (p, (a1, b1)) in vecs.iter().enumerate() {
        for (q, (a2, b2)) in vecs.iter().enumerate() {
            let pa = a.mul(
                &super::AlgebraElement::from_coeffs(a1.clone()),
                &super::AlgebraElement::from_coeffs(a2.clone()),
            );
            let pb = b.mul(
                &super::AlgebraElement::from_coeffs(b1.clone()),
                &super::AlgebraElement::from_coeffs(b2.clone()),
            );
            table[p][q] = coords(pa.coeffs(), pb.coeffs());
        }
    }
    GradedAlgebra::new(field, group, labels, degrees, 0, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_validate() {
        let f = Field::prime(5).unwrap();
        let z = GradingGroup::integers();
        assert!(truncated_polynomial(f, 3, "x", z.clone(), &[2]).unwrap().validate().passed());
        assert!(ground_field(f, z.clone()).validate().passed());
        assert!(square_zero(f, z.clone(), &["x", "y"], &[vec![1], vec![3]]).unwrap().validate().passed());
        assert!(upper_triangular(f, z.clone(), &[1]).unwrap().validate().passed());
        let a = truncated_polynomial(f, 2, "x", z.clone(), &[0]).unwrap();
        let prod = direct_product(&a, &ground_field(f, z)).unwrap();
        assert_eq!(prod.dim(), 3);
        assert!(prod.validate().passed());
    }
}
