use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use super::{bar_resolution, circle_bracket, Comparison, OracleError};
use crate::complexes::{are_cohomologous, cohomology_basis, Cochain};
use crate::lifting::{bracket, solve_homotopy_lifting, HomotopyLifting, Resolution};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    /// Indices into [`OracleReport::classes`].
    pub pair: (usize, usize),
    pub degrees: (usize, usize),
    pub agrees: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub max_degree: usize,
    pub classes: Vec<Cochain>,
    pub pairs: Vec<OracleVerdict>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.pairs.iter().all(|p| p.agrees)
    }

    pub fn failures(&self) -> usize {
        self.pairs.iter().filter(|p| !p.agrees).count()
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.classes.iter().enumerate() {
            writeln!(f, "# class {k}: degree {}", c.degree())?;
        }
        for p in &self.pairs {
            writeln!(
                f,
                "{} oracle pair=({},{}) degrees=({},{})",
                if p.agrees { "PASS" } else { "FAIL" },
                p.pair.0,
                p.pair.1,
                p.degrees.0,
                p.degrees.1
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

/// Compares, for every ordered pair of basis classes with m, n ≥ 1 and
/// m + n − 1 ≤ `max_degree`, the homotopy-lifting bracket on P with the circle
/// bracket of the transported classes on a bar complex, after transporting back.
pub fn oracle_check(res: &Resolution, max_degree: usize) -> Result<OracleReport, OracleError> {
    let p = res.complex();
    if max_degree == 0 || p.length() < max_degree + 1 {
        return Err(OracleError::BeyondTruncation(max_degree + 1));
    }
    let bar = Arc::new(bar_resolution(p.algebra().clone(), max_degree + 1)?);
    let cmp = Comparison::new(p.clone(), bar, max_degree)?;

    let mut classes = Vec::new();
    for n in 1..=max_degree {
        classes.extend(cohomology_basis(p, n)?.classes);
    }
    let liftings: Vec<HomotopyLifting> =
        classes.par_iter().map(|f| solve_homotopy_lifting(res, f)).collect::<Result<_, _>>()?;
    let on_bar: Vec<Cochain> = classes.iter().map(|f| cmp.to_bar(f)).collect::<Result<_, _>>()?;

    let mut pairs = Vec::new();
    for a in 0..classes.len() {
        for b in 0..classes.len() {
            if classes[a].degree() + classes[b].degree() - 1 <= max_degree {
                pairs.push((a, b));
            }
        }
    }
    let pairs = pairs
        .par_iter()
        .map(|&(a, b)| {
            let (x, y) = (&liftings[a], &liftings[b]);
            let direct = bracket(res, &x.cocycle, &x.map, &y.cocycle, &y.map)?;
            let oracle = cmp.from_bar(&circle_bracket(cmp.bar(), &on_bar[a], &on_bar[b])?)?;
            let agrees = are_cohomologous(p, &direct, &oracle)?;
            let witness = (!agrees)
                .then(|| format!("lifting bracket: {}\ncircle bracket: {}", direct.format(p), oracle.format(p)));
            Ok(OracleVerdict {
                pair: (a, b),
                degrees: (classes[a].degree(), classes[b].degree()),
                agrees,
                witness,
            })
        })
        .collect::<Result<Vec<_>, OracleError>>()?;
    Ok(OracleReport { max_degree, classes, pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::periodic_truncated_resolution;
    use crate::foundations::Field;

    #[test]
    fn dual_numbers_up_to_two() {
        let p = periodic_truncated_resolution(Field::Rational, 2, 5).unwrap();
        let res = Resolution::new(Arc::new(p)).unwrap();
        let report = oracle_check(&res, 2).unwrap();
        assert!(report.passed(), "{report}");
        assert!(!report.pairs.is_empty());
    }
}
