use super::{AlgebraError, GradedAlgebra};
use crate::foundations::{Bicharacter, GradingGroup};

/// A ⊗ᵗ B with `(a⊗b)(a′⊗b′) = t^{⟨|a′| , |b|⟩} aa′ ⊗ bb′`.
///
/// The basis is `a_i ⊗ b_j` in row-major order (index `i·dim B + j`), graded by
/// F ⊕ G with degree `(|a_i|, |b_j|)`.
pub fn twisted_tensor_algebra(
    a: &GradedAlgebra,
    b: &GradedAlgebra,
    t: &Bicharacter,
) -> Result<GradedAlgebra, AlgebraError> {
    if t.left_group() != a.group() || t.right_group() != b.group() {
        return Err(AlgebraError::BicharacterDomain);
    }
    if a.field() != b.field() || t.field() != a.field() {
        return Err(AlgebraError::FieldMismatch);
    }
    let (da, db) = (a.dim(), b.dim());
    let group = a.group().direct_sum(b.group());
    let labels = tensor_labels(a, b);
    let mut degrees = Vec::with_capacity(da * db);
    for i in 0..da {
        for j in 0..db {
            degrees.push(GradingGroup::concat(a.degree(i), b.degree(j)));
        }
    }
    let mut table = vec![vec![Vec::new(); da * db]; da * db];
    for i in 0..da {
        for j in 0..db {
            for i2 in 0..da {
                for j2 in 0..db {
                    let twist = t.eval_unchecked(a.degree(i2), b.degree(j));
                    let mut entry = Vec::new();
                    for (l, c) in a.mul_basis(i, i2) {
                        for (r, d) in b.mul_basis(j, j2) {
                            entry.push((l * db + r, &(c * d) * &twist));
                        }
                    }
                    table[i * db + j][i2 * db + j2] = entry;
                }
            }
        }
    }
    GradedAlgebra::new(
        a.field(),
        group,
        labels,
        degrees,
        a.unit() * db + b.unit(),
        table,
    )
}

/// Labels `ab` with unit factors dropped (`1`, `x`, `y`, `xy`), falling back to
/// `(a,b)` when that would be ambiguous.
fn tensor_labels(a: &GradedAlgebra, b: &GradedAlgebra) -> Vec<String> {
    let mut labels = Vec::with_capacity(a.dim() * b.dim());
    for i in 0..a.dim() {
        for j in 0..b.dim() {
            let (la, lb) = (a.label(i), b.label(j));
            labels.push(match (i == a.unit(), j == b.unit()) {
                (true, true) => "1".to_string(),
                (true, false) => lb.to_string(),
                (false, true) => la.to_string(),
                (false, false) => format!("{la}{lb}"),
            });
        }
    }
    let unique = labels.iter().enumerate().all(|(k, l)| !labels[..k].contains(l));
    if unique {
        return labels;
    }
    let mut labels = Vec::with_capacity(a.dim() * b.dim());
    for i in 0..a.dim() {
        for j in 0..b.dim() {
            labels.push(format!("({},{})", a.label(i), b.label(j)));
        }
    }
    labels
}
