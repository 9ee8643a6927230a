use std::sync::Arc;

use super::{TotalGen, TwistError, TwistedTotal};
use crate::algebra::DegreeMarker;
use crate::complexes::{FreeBimoduleComplex, FreeElement, TensorSquare, TensorSquareGen};
use crate::foundations::{koszul_sign, Bicharacter, Degree, Scalar};
use crate::lifting::ChainMap;

/// Homological and internal degree of one homogeneous tensor factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub homological: usize,
    pub internal: Degree,
}

impl Component {
    pub fn new(homological: usize, internal: Degree) -> Self {
        Component { homological, internal }
    }

    /// The degrees of a nonzero homogeneous x ∈ P_n.
    pub fn of(p: &FreeBimoduleComplex, n: usize, x: &FreeElement) -> Result<Self, TwistError> {
        match p.element_degree(n, x) {
            DegreeMarker::Homogeneous(d) => Ok(Component::new(n, d)),
            DegreeMarker::Zero | DegreeMarker::Inhomogeneous => Err(TwistError::Inhomogeneous),
        }
    }
}

/// A scalar together with the reordered factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reshuffled {
    pub scalar: Scalar,
    pub factors: [Component; 4],
}

/// σ((x⊗y)⊗(x′⊗y′)) = (−1)^{ju} t^{⟨|x′| , |y|⟩} (x⊗x′)⊗(y⊗y′), with x′ ∈ P_u
/// and y ∈ Q_j.
pub fn sigma(t: &Bicharacter, x: Component, y: Component, x2: Component, y2: Component) -> Reshuffled {
    let scalar = koszul_sign(t.field(), y.homological as i64, x2.homological as i64) * t.eval_unchecked(&x2.internal, &y.internal);
    Reshuffled { scalar, factors: [x, x2, y, y2] }
}

/// σ⁻¹((x⊗x′)⊗(y⊗y′)) = (−1)^{uj} t^{−⟨|x′| , |y|⟩} (x⊗y)⊗(x′⊗y′).
pub fn sigma_inv(t: &Bicharacter, x: Component, x2: Component, y: Component, y2: Component) -> Reshuffled {
    let scalar = koszul_sign(t.field(), x2.homological as i64, y.homological as i64) * t.eval_inverse(&x2.internal, &y.internal);
    Reshuffled { scalar, factors: [x, y, x2, y2] }
}

/// σ: (P⊗ᵗQ) ⊗_{A⊗ᵗB} (P⊗ᵗQ) → (P⊗_A P) ⊗ᵗ (Q⊗_B Q) and its inverse, as maps of
/// free complexes over A⊗ᵗB.
#[derive(Clone, Debug)]
pub struct SigmaMaps {
    /// (P⊗_A P) ⊗ᵗ (Q⊗_B Q).
    pub outer: TwistedTotal,
    pub sigma: ChainMap,
    pub sigma_inv: ChainMap,
}

impl SigmaMaps {
    /// `square` is the tensor square of `total`; `ps`, `qs` those of its factors.
    pub fn new(total: &TwistedTotal, square: &TensorSquare, ps: &TensorSquare, qs: &TensorSquare) -> Result<Self, TwistError> {
        let t = total.bicharacter();
        let (p, q) = (total.left(), total.right());
        let (a, b) = (p.algebra(), q.algebra());
        let db = b.dim();
        let outer = TwistedTotal::with_algebra(
            total.algebra().clone(),
            Arc::new(ps.complex().clone()),
            Arc::new(qs.complex().clone()),
            t.clone(),
        )?;
        let len = square.length().min(outer.length());

        let mut sigma_images = Vec::with_capacity(len + 1);
        let mut inv_images = vec![Vec::new(); len + 1];
        for n in 0..=len {
            let mut row = Vec::with_capacity(square.gens(n).len());
            inv_images[n] = vec![FreeElement::new(); outer.gens(n).len()];
            for (k, s) in square.gens(n).iter().enumerate() {
                let e1 = total.gens(s.j)[s.g];
                let e2 = total.gens(n - s.j)[s.h];
                let (j1, i2) = (s.j - e1.i, e2.i);
                let (m, m2) = (s.mid / db, s.mid % db);
                let d_g2 = p.gen_degree(i2, e2.g);
                // (m⊗m′)(e_{g2}⊗e′_{h2}) = t^{⟨|e_{g2}| , |m′|⟩} m e_{g2} ⊗ m′ e′_{h2}
                let inner = t.eval_unchecked(d_g2, b.degree(m2));
                let x2 = Component::new(i2, a.group().add(a.degree(m), d_g2));
                let y = Component::new(j1, q.gen_degree(j1, e1.h).clone());
                let x = Component::new(e1.i, p.gen_degree(e1.i, e1.g).clone());
                let y2 = Component::new(e2.i, Degree(Vec::new()));
                let coeff = sigma(t, x, y, x2, y2).scalar * inner;

                let pp = ps
                    .index_of(e1.i + i2, TensorSquareGen { j: e1.i, g: e1.g, mid: m, h: e2.g })
                    .expect("generator of P⊗P");
                let qq = qs
                    .index_of(j1 + (n - s.j - i2), TensorSquareGen { j: j1, g: e1.h, mid: m2, h: e2.h })
                    .expect("generator of Q⊗Q");
                let o = outer
                    .index_of(n, TotalGen { i: e1.i + i2, g: pp, h: qq })
                    .expect("generator of the outer total complex");
                let unit = total.algebra().unit();
                let mut img = FreeElement::new();
                img.add_term(o, unit, unit, coeff.clone());
                row.push(img);
                let mut back = FreeElement::new();
                back.add_term(k, unit, unit, coeff.inv().expect("twist scalars are units"));
                inv_images[n][o] = back;
            }
            sigma_images.push(row);
        }
        Ok(SigmaMaps {
            outer,
            sigma: ChainMap { shift: 0, start: 0, images: sigma_images },
            sigma_inv: ChainMap { shift: 0, start: 0, images: inv_images },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::Field;

    fn c(h: usize, d: i64) -> Component {
        Component::new(h, Degree(vec![d]))
    }

    #[test]
    fn worked_example_generators() {
        // σ((e1⊗e2′)⊗(e3⊗e4′)) = (−1)^{2·3} q^{3·2} (e1⊗e3)⊗(e2′⊗e4′)
        let q = Field::Rational;
        let t = Bicharacter::on_integers(q, q.from_i64(2)).unwrap();
        let r = sigma(&t, c(1, 1), c(2, 2), c(3, 3), c(4, 4));
        assert_eq!(r.scalar, q.from_i64(64));
        assert_eq!(r.factors, [c(1, 1), c(3, 3), c(2, 2), c(4, 4)]);
        let t = Bicharacter::on_integers(q, q.from_i64(-1)).unwrap();
        assert_eq!(sigma(&t, c(1, 1), c(1, 1), c(1, 1), c(0, 0)).scalar, q.one());
    }

    #[test]
    fn trivial_twist_pure_reshuffle() {
        let q = Field::Rational;
        let t = Bicharacter::on_integers(q, q.one()).unwrap();
        assert!(sigma(&t, c(3, 3), c(0, 0), c(5, 5), c(2, 2)).scalar.is_one());
        assert!(sigma(&t, c(3, 3), c(4, 4), c(0, 0), c(2, 2)).scalar.is_one());
    }

    #[test]
    fn inverse_law() {
        let q = Field::prime(7).unwrap();
        let t = Bicharacter::on_integers(q, q.from_i64(3)).unwrap();
        for (i, j, u, v) in [(1, 2, 3, 4), (0, 1, 1, 0), (2, 3, 1, 5)] {
            let (x, y, x2, y2) = (c(i, i as i64), c(j, 2 * j as i64 + 1), c(u, u as i64 - 1), c(v, 3));
            let s = sigma(&t, x.clone(), y.clone(), x2.clone(), y2.clone());
            let [a, b, cc, d] = s.factors.clone();
            let back = sigma_inv(&t, a, b, cc, d);
            assert!((s.scalar * back.scalar).is_one());
            assert_eq!(back.factors, [x, y, x2, y2]);
        }
    }
}
