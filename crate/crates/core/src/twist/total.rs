use std::collections::HashMap;
use std::sync::Arc;

use super::TwistError;
use crate::algebra::{twisted_tensor_algebra, AlgebraElement, GradedAlgebra};
use crate::complexes::{ComplexKind, FreeBimoduleComplex, FreeElement};
use crate::foundations::{koszul_sign, Bicharacter, Degree, GradingGroup, Scalar};

/// The generator e_g ⊗ e′_h of P_i ⊗ᵗ Q_{n−i}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalGen {
    pub i: usize,
    pub g: usize,
    pub h: usize,
}

/// The scalar s with a·e·a′ ⊗ b·e′·b′ = s · (a⊗b)(e⊗e′)(a′⊗b′), where `e`, `e2`
/// are the internal degrees of the two generators.
///
/// It inverts the bimodule structure
/// (a⊗b)(m⊗n)(a′⊗b′) = t^{⟨|m| , |b|⟩} t^{⟨|a′| , |n|⟩} t^{⟨|a′| , |b|⟩} ama′ ⊗ bnb′.
pub fn rewrite_scalar(t: &Bicharacter, e: &Degree, e2: &Degree, b: &Degree, a2: &Degree) -> Scalar {
    t.eval_inverse(e, b) * t.eval_inverse(a2, e2) * t.eval_inverse(a2, b)
}

/// The total complex ⊕_{i+j=n} P_i ⊗ᵗ Q_j as a free bimodule complex over A⊗ᵗB,
/// with d(x⊗y) = dx⊗y + (−1)^i x⊗dy.
#[derive(Clone, Debug)]
pub struct TwistedTotal {
    left: Arc<FreeBimoduleComplex>,
    right: Arc<FreeBimoduleComplex>,
    t: Bicharacter,
    complex: Arc<FreeBimoduleComplex>,
    gens: Vec<Vec<TotalGen>>,
    index: Vec<HashMap<TotalGen, usize>>,
}

impl TwistedTotal {
    /// Builds A⊗ᵗB and the total complex over it.
    pub fn new(left: Arc<FreeBimoduleComplex>, right: Arc<FreeBimoduleComplex>, t: Bicharacter) -> Result<Self, TwistError> {
        let c = twisted_tensor_algebra(left.algebra(), right.algebra(), &t)?;
        Self::with_algebra(Arc::new(c), left, right, t)
    }

    /// Same, over an already built A⊗ᵗB (so several totals share one algebra).
    pub fn with_algebra(
        c: Arc<GradedAlgebra>,
        left: Arc<FreeBimoduleComplex>,
        right: Arc<FreeBimoduleComplex>,
        t: Bicharacter,
    ) -> Result<Self, TwistError> {
        let (a, b) = (left.algebra(), right.algebra());
        if t.left_group() != a.group() || t.right_group() != b.group() || c.dim() != a.dim() * b.dim() {
            return Err(TwistError::FactorMismatch);
        }
        let db = b.dim();
        let len = left.length().min(right.length());
        let mut gens = Vec::with_capacity(len + 1);
        let mut index = Vec::with_capacity(len + 1);
        let mut gen_degrees = Vec::with_capacity(len + 1);
        let mut names = Vec::with_capacity(len + 1);
        for n in 0..=len {
            let mut list = Vec::new();
            for i in 0..=n {
                for g in 0..left.rank(i) {
                    for h in 0..right.rank(n - i) {
                        list.push(TotalGen { i, g, h });
                    }
                }
            }
            index.push(list.iter().enumerate().map(|(k, &x)| (x, k)).collect::<HashMap<_, _>>());
            gen_degrees.push(
                list.iter()
                    .map(|x| GradingGroup::concat(left.gen_degree(x.i, x.g), right.gen_degree(n - x.i, x.h)))
                    .collect::<Vec<_>>(),
            );
            names.push(
                list.iter()
                    .map(|x| format!("{}⊗{}'", left.gen_name(x.i, x.g), right.gen_name(n - x.i, x.h)))
                    .collect::<Vec<_>>(),
            );
            gens.push(list);
        }

        let mut differential = vec![Vec::new()];
        for n in 1..=len {
            let mut row = Vec::with_capacity(gens[n].len());
            for x in &gens[n] {
                let j = n - x.i;
                let (de, de2) = (left.gen_degree(x.i, x.g), right.gen_degree(j, x.h));
                let mut out = FreeElement::new();
                if x.i >= 1 {
                    for ((g2, l, r), c) in left.differential(x.i, x.g).terms() {
                        let k = index[n - 1][&TotalGen { i: x.i - 1, g: g2, h: x.h }];
                        let s = t.eval_inverse(a.degree(r), de2);
                        out.add_term(k, l * db + b.unit(), r * db + b.unit(), c * &s);
                    }
                }
                if j >= 1 {
                    let sign = koszul_sign(c.field(), x.i as i64, 1);
                    for ((h2, l, r), coeff) in right.differential(j, x.h).terms() {
                        let k = index[n - 1][&TotalGen { i: x.i, g: x.g, h: h2 }];
                        let s = t.eval_inverse(de, b.degree(l));
                        out.add_term(k, a.unit() * db + l, a.unit() * db + r, &(coeff * &s) * &sign);
                    }
                }
                row.push(out);
            }
            differential.push(row);
        }

        let augmentation = gens[0]
            .iter()
            .map(|x| plain_tensor(&c, &left.augmentation()[x.g], &right.augmentation()[x.h]))
            .collect();
        let complex = FreeBimoduleComplex::new(c, gen_degrees, differential, augmentation)?
            .with_kind(ComplexKind::TwistedTotal)
            .with_names(names);
        Ok(TwistedTotal { left, right, t, complex: Arc::new(complex), gens, index })
    }

    pub fn left(&self) -> &Arc<FreeBimoduleComplex> {
        &self.left
    }

    pub fn right(&self) -> &Arc<FreeBimoduleComplex> {
        &self.right
    }

    pub fn bicharacter(&self) -> &Bicharacter {
        &self.t
    }

    pub fn complex(&self) -> &Arc<FreeBimoduleComplex> {
        &self.complex
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        self.complex.algebra()
    }

    pub fn length(&self) -> usize {
        self.complex.length()
    }

    pub fn gens(&self, n: usize) -> &[TotalGen] {
        &self.gens[n]
    }

    pub fn index_of(&self, n: usize, x: TotalGen) -> Option<usize> {
        self.index.get(n)?.get(&x).copied()
    }

    /// x ⊗ y ∈ (P⊗ᵗQ)_{i+j} for x ∈ P_i, y ∈ Q_j, rewritten into the standard action.
    pub fn tensor(&self, i: usize, x: &FreeElement, j: usize, y: &FreeElement) -> FreeElement {
        let (a, b) = (self.left.algebra(), self.right.algebra());
        let db = b.dim();
        let n = i + j;
        let mut out = FreeElement::new();
        for ((g, l, r), c) in x.terms() {
            let de = self.left.gen_degree(i, g);
            for ((h, l2, r2), c2) in y.terms() {
                let s = rewrite_scalar(&self.t, de, self.right.gen_degree(j, h), b.degree(l2), a.degree(r));
                let k = self.index[n][&TotalGen { i, g, h }];
                out.add_term(k, l * db + l2, r * db + r2, &(c * c2) * &s);
            }
        }
        out
    }
}

/// a ⊗ b as an element of A⊗ᵗB, with no twist.
pub(crate) fn plain_tensor(c: &GradedAlgebra, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let db = b.len();
    let mut out = c.zero();
    for (i, x) in a.support() {
        for (j, y) in b.support() {
            out.add_scaled_basis(i * db + j, &(x * y));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::truncated_polynomial;
    use crate::complexes::{periodic_resolution, verify_exactness};
    use crate::foundations::Field;

    fn factors(field: Field, len: usize) -> (Arc<FreeBimoduleComplex>, Arc<FreeBimoduleComplex>) {
        let side = |label: &str| {
            let alg = truncated_polynomial(field, 2, label, GradingGroup::integers(), &[1]).unwrap();
            Arc::new(periodic_resolution(Arc::new(alg), 2, len).unwrap())
        };
        (side("x"), side("y"))
    }

    #[test]
    fn rewrite_scalar_matches_the_bimodule_action() {
        // (1⊗y)(e⊗e′) = t^{⟨|e| , 1⟩} e ⊗ y e′, so e ⊗ y e′ = q^{-|e|} (1⊗y)(e⊗e′).
        let q = Field::Rational;
        let t = Bicharacter::on_integers(q, q.from_i64(3)).unwrap();
        let d = |k: i64| Degree(vec![k]);
        assert_eq!(rewrite_scalar(&t, &d(2), &d(5), &d(1), &d(0)), q.from_ratio(1, 9).unwrap());
        // e·x ⊗ e′ = q^{-|e′|} (e⊗e′)(x⊗1)
        assert_eq!(rewrite_scalar(&t, &d(2), &d(5), &d(0), &d(1)), q.from_ratio(1, 243).unwrap());
        // e·x ⊗ y·e′ picks up all three factors
        assert_eq!(rewrite_scalar(&t, &d(1), &d(1), &d(1), &d(1)), q.from_ratio(1, 27).unwrap());
        let trivial = Bicharacter::on_integers(q, q.one()).unwrap();
        assert!(rewrite_scalar(&trivial, &d(4), &d(3), &d(1), &d(1)).is_one());
    }

    #[test]
    fn untwisted_total_differential() {
        let q = Field::Rational;
        let (p, pq) = factors(q, 3);
        let t = Bicharacter::on_integers(q, q.one()).unwrap();
        let tot = TwistedTotal::new(p, pq, t).unwrap();
        let c = tot.complex();
        assert_eq!(c.rank(3), 4);
        // d(e1⊗e1′) = x·(e0⊗e1′) − (e0⊗e1′)·x − y·(e1⊗e0′) + (e1⊗e0′)·y
        let k = tot.index_of(2, TotalGen { i: 1, g: 0, h: 0 }).unwrap();
        let alg = tot.algebra();
        let (x, y, one) = (alg.index_of("x").unwrap(), alg.index_of("y").unwrap(), alg.unit());
        let e0e1 = tot.index_of(1, TotalGen { i: 0, g: 0, h: 0 }).unwrap();
        let e1e0 = tot.index_of(1, TotalGen { i: 1, g: 0, h: 0 }).unwrap();
        let mut want = FreeElement::new();
        want.add_term(e0e1, x, one, q.one());
        want.add_term(e0e1, one, x, q.from_i64(-1));
        want.add_term(e1e0, y, one, q.from_i64(-1));
        want.add_term(e1e0, one, y, q.one());
        assert_eq!(c.differential(2, k), &want);
    }

    #[test]
    fn twisted_totals_are_resolutions() {
        for (field, q) in [(Field::Rational, -1), (Field::Rational, 2), (Field::prime(5).unwrap(), 2)] {
            let (p, pq) = factors(field, 4);
            let t = Bicharacter::on_integers(field, field.from_i64(q)).unwrap();
            let tot = TwistedTotal::new(p, pq, t).unwrap();
            assert!(tot.complex().validate().passed(), "q = {q}");
            assert!(verify_exactness(tot.complex(), 3).unwrap().exact(), "q = {q}");
        }
    }

    #[test]
    fn tensor_rewrites_scalars() {
        let q = Field::Rational;
        let (p, pq) = factors(q, 2);
        let t = Bicharacter::on_integers(q, q.from_i64(5)).unwrap();
        let tot = TwistedTotal::new(p.clone(), pq.clone(), t).unwrap();
        let (a, b) = (p.algebra(), pq.algebra());
        // x·e1 ⊗ e1′·y = (x⊗1)(e1⊗e1′)(1⊗y): nothing crosses
        let mut xe1 = FreeElement::new();
        xe1.add_term(0, a.index_of("x").unwrap(), a.unit(), q.one());
        let mut e1y = FreeElement::new();
        e1y.add_term(0, b.unit(), b.index_of("y").unwrap(), q.one());
        let out = tot.tensor(1, &xe1, 1, &e1y);
        let k = tot.index_of(2, TotalGen { i: 1, g: 0, h: 0 }).unwrap();
        let c = tot.algebra();
        let (x, y) = (c.index_of("x").unwrap(), c.index_of("y").unwrap());
        assert_eq!(out.terms().collect::<Vec<_>>(), vec![((k, x, y), &q.one())]);
        // e1·x ⊗ y·e1′ = q^{-3} (1⊗y)(e1⊗e1′)(x⊗1)
        let mut e1x = FreeElement::new();
        e1x.add_term(0, a.unit(), a.index_of("x").unwrap(), q.one());
        let mut ye1 = FreeElement::new();
        ye1.add_term(0, b.index_of("y").unwrap(), b.unit(), q.one());
        let out = tot.tensor(1, &e1x, 1, &ye1);
        assert_eq!(out.terms().collect::<Vec<_>>(), vec![((k, y, x), &q.from_ratio(1, 125).unwrap())]);
    }
}
