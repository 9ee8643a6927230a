//! The worked example k[x]/(x²) ⊗ k[y]/(y²) over ℚ: closed-form liftings, the
//! tensor lifting ψ_{f⊗g}, and the bracket [f⊗f′, h⊗h′].

use std::fmt;
use std::sync::Arc;

use crate::algebra::{truncated_polynomial, AlgebraElement, GradedAlgebra};
use crate::complexes::{periodic_resolution, Cochain, FreeBimoduleComplex, FreeElement};
use crate::foundations::{Bicharacter, Field, GradingGroup};
use crate::lifting::{bracket, verify_homotopy_lifting, ChainMap, Resolution};
use crate::twist::{
    graded_tensor_bracket, tensor_homotopy_lifting, twisted_tensor_resolution, PairDegrees, TotalGen, TwistError,
    TwistedTensorResolution,
};

pub struct WorkedExample {
    pub tt: TwistedTensorResolution,
    /// e1 ↦ x, e2 ↦ 1 on P; e1′ ↦ y, e2′ ↦ y and e2′ ↦ 1 on Q.
    pub f: Cochain,
    pub h: Cochain,
    pub f2: Cochain,
    pub g: Cochain,
    pub h2: Cochain,
    /// e_i ↦ i·e_i
    pub psi_f: ChainMap,
    pub psi_f2: ChainMap,
    /// e′_{2j} ↦ e′_{2j−1}, zero in odd degrees
    pub psi_g: ChainMap,
    pub psi_h: ChainMap,
    pub psi_h2: ChainMap,
}

fn factor(label: &str, length: usize) -> Result<Arc<Resolution>, TwistError> {
    let alg = truncated_polynomial(Field::Rational, 2, label, GradingGroup::integers(), &[1])?;
    let p = periodic_resolution(Arc::new(alg), 2, length)?;
    Ok(Arc::new(Resolution::new(Arc::new(p))?))
}

fn scaling(alg: &GradedAlgebra, length: usize) -> ChainMap {
    let images = (0..=length)
        .map(|i| vec![FreeElement::generator(alg, 0).scaled(&alg.field().from_i64(i as i64))])
        .collect();
    ChainMap { shift: 0, start: 0, images }
}

fn even_shift(alg: &GradedAlgebra, length: usize) -> ChainMap {
    let images = (0..=length)
        .map(|j| match j {
            0 => Vec::new(),
            _ if j % 2 == 0 => vec![FreeElement::generator(alg, 0)],
            _ => vec![FreeElement::new()],
        })
        .collect();
    ChainMap { shift: -1, start: 1, images }
}

fn zero_lifting(length: usize) -> ChainMap {
    let images = (0..=length).map(|j| if j == 0 { Vec::new() } else { vec![FreeElement::new()] }).collect();
    ChainMap { shift: -1, start: 1, images }
}

impl WorkedExample {
    /// Factors of the given length (at least 6).
    pub fn new(length: usize) -> Result<Self, TwistError> {
        let length = length.max(6);
        let (pres, qres) = (factor("x", length)?, factor("y", length)?);
        let (p, q) = (pres.complex().clone(), qres.complex().clone());
        let t = Bicharacter::trivial(GradingGroup::integers(), GradingGroup::integers(), Field::Rational);
        let tt = twisted_tensor_resolution(pres, qres, t)?;
        let (a, b) = (p.algebra(), q.algebra());
        Ok(WorkedExample {
            f: Cochain::single(&p, 1, 0, a.basis(1)),
            h: Cochain::single(&p, 2, 0, a.one()),
            f2: Cochain::single(&q, 1, 0, b.basis(1)),
            g: Cochain::single(&q, 2, 0, b.basis(1)),
            h2: Cochain::single(&q, 2, 0, b.one()),
            psi_f: scaling(a, length),
            psi_f2: scaling(b, length),
            psi_g: even_shift(b, length),
            psi_h: zero_lifting(length),
            psi_h2: zero_lifting(length),
            tt,
        })
    }

    pub fn run(&self) -> Result<ExampleReport, TwistError> {
        let mut out = ExampleReport::default();
        let (pres, qres) = (self.tt.left(), self.tt.right());
        let res = self.tt.resolution();
        let total = self.tt.total();
        let t = total.complex();
        let c = total.algebra();

        let p = pres.complex();
        let table: Vec<String> = (1..=4)
            .map(|i| format!("{} -> {}", p.gen_name(i, 0), p.format_element(i, &self.psi_f.images[i][0])))
            .collect();
        out.info(format!("psi_f: {}", table.join("; ")));
        for (name, r, f, psi) in [
            ("psi_f", pres, &self.f, &self.psi_f),
            ("psi_g", qres, &self.g, &self.psi_g),
            ("psi_f'", qres, &self.f2, &self.psi_f2),
            ("psi_h", pres, &self.h, &self.psi_h),
            ("psi_h'", qres, &self.h2, &self.psi_h2),
        ] {
            let report = verify_homotopy_lifting(r, f, psi, true);
            out.check(report.passed(), format!("{name} satisfies the lifting equation"));
        }

        let fg = tensor_homotopy_lifting(&self.tt, &self.f, &self.psi_f, &self.g, &self.psi_g)?;
        let ff = tensor_homotopy_lifting(&self.tt, &self.f, &self.psi_f, &self.f2, &self.psi_f2)?;
        let hh = tensor_homotopy_lifting(&self.tt, &self.h, &self.psi_h, &self.h2, &self.psi_h2)?;
        for (name, lift) in [("f⊗g", &fg), ("f⊗f'", &ff), ("h⊗h'", &hh)] {
            let report = verify_homotopy_lifting(res, &lift.cocycle, &lift.map, false);
            out.check(report.passed(), format!("psi_{{{name}}} is a homotopy lifting on P⊗Q"));
        }

        let gen = |n: usize, i: usize| total.index_of(n, TotalGen { i, g: 0, h: 0 }).expect("generator");
        let term = |x: &mut FreeElement, n: usize, i: usize, l: &str, r: &str, k: i64| {
            let (l, r) = (c.index_of(l).expect("label"), c.index_of(r).expect("label"));
            x.add_term(gen(n, i), l, r, c.field().from_i64(k));
        };
        let mut want = FreeElement::new();
        term(&mut want, 1, 1, "1", "y", 1);
        term(&mut want, 1, 0, "x", "1", 1);
        self.compare(&mut out, "psi_{f⊗g}(e1⊗e2')", &fg.map.images[3][gen(3, 1)], &want, t, 1);
        let mut want = FreeElement::new();
        term(&mut want, 4, 2, "1", "y", 2);
        term(&mut want, 4, 1, "x", "1", -3);
        self.compare(&mut out, "psi_{f⊗f'}(e2⊗e3')", &ff.map.images[5][gen(5, 2)], &want, t, 4);
        let mut want = FreeElement::new();
        term(&mut want, 4, 3, "1", "y", 3);
        term(&mut want, 4, 2, "x", "1", -2);
        self.compare(&mut out, "psi_{f⊗f'}(e3⊗e2')", &ff.map.images[5][gen(5, 3)], &want, t, 4);

        let br = bracket(res, &ff.cocycle, &ff.map, &hh.cocycle, &hh.map)?;
        let y = c.basis(c.index_of("y").expect("label"));
        let x = c.basis(c.index_of("x").expect("label"));
        let minus_two = c.field().from_i64(-2);
        let e23 = br.value(gen(5, 2));
        let e32 = br.value(gen(5, 3));
        self.compare_value(&mut out, "[f⊗f', h⊗h'](e2⊗e3')", e23, &y.scale(&c.field().from_i64(2)), c);
        self.compare_value(&mut out, "[f⊗f', h⊗h'](e3⊗e2')", e32, &x.scale(&minus_two), c);

        // the same values from the graded tensor formula, with factor-level
        // brackets from the closed-form liftings and products (f⊗f′)Δ
        let deg = PairDegrees { m: 1, m2: 2, n: 1, n2: 2 };
        let fh = bracket(pres, &self.f, &self.psi_f, &self.h, &self.psi_h)?;
        let fh2 = bracket(qres, &self.f2, &self.psi_f2, &self.h2, &self.psi_h2)?;
        let cup_a = crate::lifting::cup(pres, &self.h, &self.f)?;
        let cup_b = crate::lifting::cup(qres, &self.h2, &self.f2)?;
        let formula = graded_tensor_bracket(total, &fh, &cup_a, &cup_b, &fh2, deg, false)?;
        out.check(formula == br, format!("graded tensor formula gives {}", formula.format(t)));
        Ok(out)
    }

    fn compare(
        &self,
        out: &mut ExampleReport,
        name: &str,
        got: &FreeElement,
        want: &FreeElement,
        t: &FreeBimoduleComplex,
        n: usize,
    ) {
        out.check(got == want, format!("{name} = {}", t.format_element(n, got)));
    }

    fn compare_value(&self, out: &mut ExampleReport, name: &str, got: &AlgebraElement, want: &AlgebraElement, c: &GradedAlgebra) {
        out.check(got == want, format!("{name} = {}", c.format_element(got)));
    }
}

/// One line per computed quantity; checked lines carry PASS or FAIL.
#[derive(Clone, Debug, Default)]
pub struct ExampleReport {
    pub lines: Vec<(Option<bool>, String)>,
}

impl ExampleReport {
    fn check(&mut self, ok: bool, text: String) {
        self.lines.push((Some(ok), text));
    }

    fn info(&mut self, text: String) {
        self.lines.push((None, text));
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|(ok, _)| ok.unwrap_or(true))
    }
}

impl fmt::Display for ExampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (ok, text) in &self.lines {
            match ok {
                Some(true) => writeln!(f, "PASS {text}")?,
                Some(false) => writeln!(f, "FAIL {text}")?,
                None => writeln!(f, "     {text}")?,
            }
        }
        Ok(())
    }
}
