use std::fmt;

use rayon::prelude::*;

use super::{graded_tensor_bracket, graded_tensor_cup, tensor_cochain, PairDegrees, TwistError, TwistedTensorResolution};
use crate::complexes::{are_cohomologous, cohomology_basis, internal_degree, Cochain, FreeBimoduleComplex};
use crate::foundations::{Bicharacter, Degree};
use crate::lifting::{bracket, cup, solve_homotopy_lifting, HomotopyLifting, Resolution};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FactorizationOptions {
    /// Drop (−1)^{(m′−1)n} from the bracket formula. A sanity check on the
    /// verifier: with it set, some pair must fail.
    pub drop_bracket_sign: bool,
}

/// A cohomology-basis class of one factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorClass {
    pub cochain: Cochain,
    pub internal: Degree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairVerdict {
    /// X = f_i ⊗ g_j, Y = f_u ⊗ g_v.
    pub pair: (usize, usize, usize, usize),
    pub degrees: PairDegrees,
    pub bracket: bool,
    pub cup: bool,
    /// Direct and formula cochains when something failed.
    pub witness: Option<String>,
}

impl PairVerdict {
    pub fn passed(&self) -> bool {
        self.bracket && self.cup
    }
}

#[derive(Clone, Debug)]
pub struct FactorizationReport {
    pub bound: usize,
    pub left: Vec<FactorClass>,
    pub right: Vec<FactorClass>,
    /// `(i, j, ψ verified)` for each realized class f_i ⊗ g_j.
    pub liftings: Vec<(usize, usize, bool)>,
    pub pairs: Vec<PairVerdict>,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.liftings.iter().all(|l| l.2) && self.pairs.iter().all(PairVerdict::passed)
    }

    pub fn failures(&self) -> usize {
        self.pairs.iter().filter(|p| !p.passed()).count()
    }
}

impl fmt::Display for FactorizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# total degree bound {}", self.bound)?;
        for (name, list) in [("A", &self.left), ("B", &self.right)] {
            for (k, c) in list.iter().enumerate() {
                writeln!(f, "# class {name}{k}: degree {} internal {}", c.cochain.degree(), c.internal)?;
            }
        }
        for (i, j, ok) in &self.liftings {
            writeln!(f, "{} lifting=({i},{j})", if *ok { "PASS" } else { "FAIL" })?;
        }
        for p in &self.pairs {
            let (i, j, u, v) = p.pair;
            let d = p.degrees;
            writeln!(
                f,
                "{} pair=({i},{j},{u},{v}) degrees=({},{},{},{}) bracket={} cup={}",
                if p.passed() { "PASS" } else { "FAIL" },
                d.m,
                d.n,
                d.m2,
                d.n2,
                if p.bracket { "ok" } else { "differs" },
                if p.cup { "ok" } else { "differs" },
            )?;
            if let Some(w) = &p.witness {
                for line in w.lines() {
                    writeln!(f, "  {line}")?;
                }
            }
        }
        write!(f, "{} pairs, {} failed", self.pairs.len(), self.failures())
    }
}

/// Basis classes of degrees 1..bound whose internal degree lies in the kernel
/// picked by `keep`.
fn factor_classes(
    p: &FreeBimoduleComplex,
    bound: usize,
    keep: impl Fn(&Degree) -> bool,
) -> Result<Vec<FactorClass>, TwistError> {
    let mut out = Vec::new();
    for n in 1..bound {
        for cochain in cohomology_basis(p, n)?.classes {
            let internal = internal_degree(p, &cochain).homogeneous().cloned().ok_or(TwistError::Inhomogeneous)?;
            if keep(&internal) {
                out.push(FactorClass { cochain, internal });
            }
        }
    }
    Ok(out)
}

struct FactorData {
    classes: Vec<FactorClass>,
    liftings: Vec<HomotopyLifting>,
}

impl FactorData {
    fn new(res: &Resolution, bound: usize, keep: impl Fn(&Degree) -> bool) -> Result<Self, TwistError> {
        let classes = factor_classes(res.complex(), bound, keep)?;
        let liftings = classes
            .iter()
            .map(|c| solve_homotopy_lifting(res, &c.cochain))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FactorData { classes, liftings })
    }

    fn bracket(&self, res: &Resolution, a: usize, b: usize) -> Result<Cochain, TwistError> {
        let (x, y) = (&self.liftings[a], &self.liftings[b]);
        Ok(bracket(res, &x.cocycle, &x.map, &y.cocycle, &y.map)?)
    }

    /// (f_a ⊗ f_b)Δ, the order in which the graded tensor formulas hold; this is
    /// f_b ⌣ f_a in the convention of [`cup`].
    fn cup(&self, res: &Resolution, a: usize, b: usize) -> Result<Cochain, TwistError> {
        Ok(cup(res, &self.classes[b].cochain, &self.classes[a].cochain)?)
    }
}

/// Checks the bracket and cup factorization on every ordered pair of realized
/// classes f_i ⊗ g_j with factor degrees ≥ 1 and total degree ≤ `bound`.
///
/// Brackets on P⊗ᵗQ use liftings found by the solver, independently of the
/// tensor formula for ψ_{f⊗ᵗg}. Pairs run in parallel; the report is in
/// canonical order.
pub fn verify_factorization(
    tt: &TwistedTensorResolution,
    bound: usize,
    options: FactorizationOptions,
) -> Result<FactorizationReport, TwistError> {
    if 2 * bound + 1 > tt.length() {
        return Err(TwistError::BeyondTruncation(2 * bound + 1));
    }
    let t: &Bicharacter = tt.bicharacter();
    let (pres, qres) = (tt.left(), tt.right());
    let left = FactorData::new(pres, bound, |d| t.left_kernel_violation(d).is_none())?;
    let right = FactorData::new(qres, bound, |d| t.right_kernel_violation(d).is_none())?;
    let total = tt.total();
    let res = tt.resolution();

    let mut realized = Vec::new();
    for (i, f) in left.classes.iter().enumerate() {
        for (j, g) in right.classes.iter().enumerate() {
            if f.cochain.degree() + g.cochain.degree() <= bound {
                realized.push((i, j));
            }
        }
    }
    let lifted: Vec<(Cochain, HomotopyLifting)> = realized
        .par_iter()
        .map(|&(i, j)| {
            let x = tensor_cochain(total, &left.classes[i].cochain, &right.classes[j].cochain)?.cochain;
            let psi = solve_homotopy_lifting(res, &x)?;
            Ok((x, psi))
        })
        .collect::<Result<_, TwistError>>()?;
    let liftings = realized
        .iter()
        .zip(&lifted)
        .map(|(&(i, j), (_, psi))| (i, j, psi.second_condition))
        .collect();

    let pairs: Vec<(usize, usize)> = (0..realized.len())
        .flat_map(|a| (0..realized.len()).map(move |b| (a, b)))
        .collect();
    let pairs = pairs
        .par_iter()
        .map(|&(a, b)| {
            let ((i, j), (u, v)) = (realized[a], realized[b]);
            let deg = PairDegrees {
                m: left.classes[i].cochain.degree(),
                m2: left.classes[u].cochain.degree(),
                n: right.classes[j].cochain.degree(),
                n2: right.classes[v].cochain.degree(),
            };
            let (x, psi_x) = &lifted[a];
            let (y, psi_y) = &lifted[b];
            let direct = bracket(res, x, &psi_x.map, y, &psi_y.map)?;
            let formula = graded_tensor_bracket(
                total,
                &left.bracket(pres, i, u)?,
                &left.cup(pres, i, u)?,
                &right.cup(qres, j, v)?,
                &right.bracket(qres, j, v)?,
                deg,
                options.drop_bracket_sign,
            )?;
            let bracket_ok = are_cohomologous(res.complex(), &direct, &formula)?;
            let direct_cup = cup(res, y, x)?; // (X⊗Y)Δ
            let formula_cup = graded_tensor_cup(total, &left.cup(pres, i, u)?, &right.cup(qres, j, v)?, deg)?;
            let cup_ok = are_cohomologous(res.complex(), &direct_cup, &formula_cup)?;
            let witness = (!bracket_ok || !cup_ok).then(|| {
                let p = res.complex();
                format!(
                    "direct bracket: {}\nformula bracket: {}\ndirect cup: {}\nformula cup: {}",
                    direct.format(p),
                    formula.format(p),
                    direct_cup.format(p),
                    formula_cup.format(p)
                )
            });
            Ok(PairVerdict { pair: (i, j, u, v), degrees: deg, bracket: bracket_ok, cup: cup_ok, witness })
        })
        .collect::<Result<Vec<_>, TwistError>>()?;

    Ok(FactorizationReport { bound, left: left.classes, right: right.classes, liftings, pairs })
}
