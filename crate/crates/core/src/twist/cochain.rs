use super::total::plain_tensor;
use super::{TwistError, TwistedTotal};
use crate::algebra::DegreeMarker;
use crate::complexes::{internal_degree, Cochain};
use crate::foundations::{koszul_sign, Degree};

/// f ⊗ᵗ g realized on P⊗ᵗQ, keeping its factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorCochain {
    pub left: Cochain,
    pub right: Cochain,
    pub cochain: Cochain,
}

/// Which factor a kernel condition failed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// (f⊗ᵗg)(e⊗e′) = (−1)^{mn} t^{−⟨|e| , u_g⟩} f(e) ⊗ g(e′).
///
/// The internal degree of f must lie in F′ and that of g in G′, which is what
/// makes the formula A⊗ᵗB-bilinear.
pub fn tensor_cochain(total: &TwistedTotal, f: &Cochain, g: &Cochain) -> Result<TensorCochain, TwistError> {
    let (p, q) = (total.left(), total.right());
    let t = total.bicharacter();
    let (m, n) = (f.degree(), g.degree());
    if m + n > total.length() {
        return Err(TwistError::BeyondTruncation(m + n));
    }
    let u_f = homogeneous(internal_degree(p, f))?;
    let u_g = homogeneous(internal_degree(q, g))?;
    if let Some(d) = &u_f {
        if let Some(generator) = t.left_kernel_violation(d) {
            return Err(TwistError::NotInKernel { side: Side::Left, degree: d.clone(), generator });
        }
    }
    if let Some(d) = &u_g {
        if let Some(generator) = t.right_kernel_violation(d) {
            return Err(TwistError::NotInKernel { side: Side::Right, degree: d.clone(), generator });
        }
    }
    let c = total.algebra();
    let sign = koszul_sign(c.field(), m as i64, n as i64);
    let values = total
        .gens(m + n)
        .iter()
        .map(|x| {
            if x.i != m {
                return c.zero();
            }
            let v = plain_tensor(c, f.value(x.g), g.value(x.h));
            let twist = match &u_g {
                Some(u) => t.eval_inverse(p.gen_degree(m, x.g), u),
                None => c.field().one(),
            };
            v.scale(&(&sign * &twist))
        })
        .collect();
    Ok(TensorCochain {
        left: f.clone(),
        right: g.clone(),
        cochain: Cochain::new(m + n, values),
    })
}

fn homogeneous(d: DegreeMarker) -> Result<Option<Degree>, TwistError> {
    match d {
        DegreeMarker::Zero => Ok(None),
        DegreeMarker::Homogeneous(d) => Ok(Some(d)),
        DegreeMarker::Inhomogeneous => Err(TwistError::Inhomogeneous),
    }
}

/// Homological degrees of f, f′ (over A) and g, g′ (over B).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairDegrees {
    pub m: usize,
    pub m2: usize,
    pub n: usize,
    pub n2: usize,
}

/// (f⊗g) ⌣ (f′⊗g′) = (−1)^{m′n} (f⌣f′) ⊗ (g⌣g′).
pub fn graded_tensor_cup(
    total: &TwistedTotal,
    cup_a: &Cochain,
    cup_b: &Cochain,
    deg: PairDegrees,
) -> Result<Cochain, TwistError> {
    let sign = koszul_sign(total.algebra().field(), deg.m2 as i64, deg.n as i64);
    Ok(tensor_cochain(total, cup_a, cup_b)?.cochain.scale(&sign))
}

/// [f⊗g, f′⊗g′] = (−1)^{(m′−1)n} [f,f′] ⊗ (g⌣g′) + (−1)^{m′(n−1)} (f⌣f′) ⊗ [g,g′].
///
/// `drop_first_sign` replaces (−1)^{(m′−1)n} by 1; it exists only to check that
/// the verification notices a wrong sign.
pub fn graded_tensor_bracket(
    total: &TwistedTotal,
    bracket_a: &Cochain,
    cup_a: &Cochain,
    cup_b: &Cochain,
    bracket_b: &Cochain,
    deg: PairDegrees,
    drop_first_sign: bool,
) -> Result<Cochain, TwistError> {
    let field = total.algebra().field();
    let (m2, n) = (deg.m2 as i64, deg.n as i64);
    let s1 = if drop_first_sign { field.one() } else { koszul_sign(field, m2 - 1, n) };
    let s2 = koszul_sign(field, m2, n - 1);
    let first = tensor_cochain(total, bracket_a, cup_b)?.cochain.scale(&s1);
    let second = tensor_cochain(total, cup_a, bracket_b)?.cochain.scale(&s2);
    Ok(first.add(&second))
}
