use std::collections::HashMap;
use std::sync::Arc;

use super::{element_times_generator, generator_times_element, Cochain, ComplexKind, FreeBimoduleComplex, FreeElement};
use crate::algebra::AlgebraElement;
use crate::foundations::koszul_sign;

/// The generator e_g ⊗ b_mid e_h of (P ⊗_A P)_n with e_g ∈ P_j, e_h ∈ P_{n−j}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorSquareGen {
    pub j: usize,
    pub g: usize,
    pub mid: usize,
    pub h: usize,
}

/// P ⊗_A P as a free bimodule complex. Since P_j ⊗_A P_l is free on
/// e_g ⊗ b e_h with b running over a basis of A, its generators carry the middle
/// basis index.
#[derive(Clone, Debug)]
pub struct TensorSquare {
    base: Arc<FreeBimoduleComplex>,
    complex: FreeBimoduleComplex,
    gens: Vec<Vec<TensorSquareGen>>,
    index: Vec<HashMap<TensorSquareGen, usize>>,
}

impl TensorSquare {
    /// Total degrees 0..=up_to (at most the length of `base`).
    pub fn new(base: Arc<FreeBimoduleComplex>, up_to: usize) -> Self {
        let up_to = up_to.min(base.length());
        let alg = base.algebra().clone();
        let grp = alg.group();
        let dim = alg.dim();
        let mut gens = Vec::with_capacity(up_to + 1);
        let mut index = Vec::with_capacity(up_to + 1);
        let mut gen_degrees = Vec::with_capacity(up_to + 1);
        let mut names = Vec::with_capacity(up_to + 1);
        for n in 0..=up_to {
            let mut list = Vec::new();
            for j in 0..=n {
                for g in 0..base.rank(j) {
                    for mid in 0..dim {
                        for h in 0..base.rank(n - j) {
                            list.push(TensorSquareGen { j, g, mid, h });
                        }
                    }
                }
            }
            let idx: HashMap<_, _> = list.iter().enumerate().map(|(i, &t)| (t, i)).collect();
            gen_degrees.push(
                list.iter()
                    .map(|t| {
                        grp.add(
                            &grp.add(base.gen_degree(t.j, t.g), alg.degree(t.mid)),
                            base.gen_degree(n - t.j, t.h),
                        )
                    })
                    .collect::<Vec<_>>(),
            );
            names.push(
                list.iter()
                    .map(|t| {
                        let left = base.gen_name(t.j, t.g);
                        let right = base.gen_name(n - t.j, t.h);
                        if t.mid == alg.unit() {
                            format!("{left}⊗{right}")
                        } else {
                            format!("{left}·{}⊗{right}", alg.label(t.mid))
                        }
                    })
                    .collect::<Vec<_>>(),
            );
            gens.push(list);
            index.push(idx);
        }

        let mut differential = vec![Vec::new()];
        for n in 1..=up_to {
            let mut row = Vec::with_capacity(gens[n].len());
            for t in &gens[n] {
                let l = n - t.j;
                let mut out = FreeElement::new();
                if t.j >= 1 {
                    // d(e_g)·b ⊗ e_h
                    for ((g2, a, r), c) in base.differential(t.j, t.g).terms() {
                        for (w, c2) in alg.mul_basis(r, t.mid) {
                            let k = index[n - 1][&TensorSquareGen { j: t.j - 1, g: g2, mid: *w, h: t.h }];
                            out.add_term(k, a, alg.unit(), c * c2);
                        }
                    }
                }
                if l >= 1 {
                    // (−1)^j e_g·b ⊗ d(e_h)
                    let sign = koszul_sign(alg.field(), 1, t.j as i64);
                    for ((h2, a, r), c) in base.differential(l, t.h).terms() {
                        for (w, c2) in alg.mul_basis(t.mid, a) {
                            let k = index[n - 1][&TensorSquareGen { j: t.j, g: t.g, mid: *w, h: h2 }];
                            out.add_term(k, alg.unit(), r, &(c * c2) * &sign);
                        }
                    }
                }
                row.push(out);
            }
            differential.push(row);
        }
        let augmentation = gens[0]
            .iter()
            .map(|t| {
                let aug = base.augmentation();
                alg.mul(&alg.mul(&aug[t.g], &alg.basis(t.mid)), &aug[t.h])
            })
            .collect();
        let complex = FreeBimoduleComplex::new(alg, gen_degrees, differential, augmentation)
            .expect("tensor square has consistent shape")
            .with_kind(ComplexKind::TensorSquare)
            .with_names(names);
        TensorSquare { base, complex, gens, index }
    }

    pub fn base(&self) -> &Arc<FreeBimoduleComplex> {
        &self.base
    }

    pub fn complex(&self) -> &FreeBimoduleComplex {
        &self.complex
    }

    pub fn length(&self) -> usize {
        self.complex.length()
    }

    pub fn gens(&self, n: usize) -> &[TensorSquareGen] {
        &self.gens[n]
    }

    pub fn index_of(&self, n: usize, t: TensorSquareGen) -> Option<usize> {
        self.index.get(n)?.get(&t).copied()
    }

    /// The element e_g ⊗ b_mid e_h of total degree n.
    pub fn element(&self, n: usize, t: TensorSquareGen) -> FreeElement {
        let k = self.index_of(n, t).expect("generator of the tensor square");
        self.complex.generator(k)
    }

    /// x ⊗ y for x = Σ a e_g a′ ∈ P_j and y ∈ P_{n−j}, moving a′ across ⊗_A.
    pub fn tensor(&self, j: usize, x: &FreeElement, l: usize, y: &FreeElement) -> FreeElement {
        let alg = self.base.algebra();
        let n = j + l;
        let mut out = FreeElement::new();
        for ((g, a, r), c) in x.terms() {
            for ((h, a2, r2), c2) in y.terms() {
                let cc = c * c2;
                for (w, c3) in alg.mul_basis(r, a2) {
                    let k = self.index[n][&TensorSquareGen { j, g, mid: *w, h }];
                    out.add_term(k, a, r2, &cc * c3);
                }
            }
        }
        out
    }

    /// (f⊗1)(x) ∈ P_{n−m} for x ∈ (P⊗_A P)_n, identifying A ⊗_A P with P.
    pub fn apply_left(&self, f: &Cochain, n: usize, x: &FreeElement) -> FreeElement {
        let alg = self.base.algebra();
        let m = f.degree();
        let mut out = FreeElement::new();
        for ((i, l, r), c) in x.terms() {
            let t = self.gens[n][i];
            if t.j != m {
                continue;
            }
            let a = alg.mul(&alg.mul(&alg.basis(l), f.value(t.g)), &alg.basis(t.mid));
            out.add_scaled(&element_times_generator(&a, t.h, r), c);
        }
        out
    }

    /// (1⊗f)(x) ∈ P_{n−m}, with the Koszul sign (−1)^{m·j}.
    pub fn apply_right(&self, f: &Cochain, n: usize, x: &FreeElement) -> FreeElement {
        let alg = self.base.algebra();
        let m = f.degree();
        let mut out = FreeElement::new();
        for ((i, l, r), c) in x.terms() {
            let t = self.gens[n][i];
            if n - t.j != m {
                continue;
            }
            let sign = koszul_sign(alg.field(), m as i64, t.j as i64);
            let a = alg.mul(&alg.mul(&alg.basis(t.mid), f.value(t.h)), &alg.basis(r));
            out.add_scaled(&generator_times_element(l, t.g, &a), &(c * &sign));
        }
        out
    }

    /// (F⊗G)(x) ∈ A with (F⊗G)(u⊗v) = (−1)^{|G||u|} F(u)G(v).
    pub fn apply_pair(&self, f: &Cochain, g: &Cochain, n: usize, x: &FreeElement) -> AlgebraElement {
        let alg = self.base.algebra();
        let mut out = alg.zero();
        for ((i, l, r), c) in x.terms() {
            let t = self.gens[n][i];
            if t.j != f.degree() || n - t.j != g.degree() {
                continue;
            }
            let sign = koszul_sign(alg.field(), g.degree() as i64, t.j as i64);
            let v = alg.mul(
                &alg.mul(&alg.mul(&alg.basis(l), f.value(t.g)), &alg.basis(t.mid)),
                &alg.mul(g.value(t.h), &alg.basis(r)),
            );
            out = out.add(&v.scale(&(c * &sign)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{periodic_truncated_resolution, verify_exactness};
    use crate::foundations::Field;

    #[test]
    fn tensor_square_is_a_resolution() {
        let p = Arc::new(periodic_truncated_resolution(Field::Rational, 2, 4).unwrap());
        let ts = TensorSquare::new(p, 4);
        assert!(ts.complex().validate().passed());
        assert_eq!(ts.complex().rank(2), 3 * 2);
        assert!(verify_exactness(ts.complex(), 3).unwrap().exact());
    }
}
