use std::sync::Arc;

use super::{BarComplex, OracleError};
use crate::complexes::{are_cohomologous, cohomology_basis, Cochain, FreeBimoduleComplex};
use crate::lifting::{lift_chain_map, BaseMap, ChainMap};

/// Comparison maps ι: P → Bar and π: Bar → P lifting the identity of A,
/// certified on cohomology up to `degree`.
#[derive(Clone, Debug)]
pub struct Comparison {
    source: Arc<FreeBimoduleComplex>,
    bar: Arc<BarComplex>,
    iota: ChainMap,
    pi: ChainMap,
    degree: usize,
}

impl Comparison {
    /// Lifts both maps through degree `degree` and checks that f ↦ f∘π∘ι and
    /// g ↦ g∘ι∘π fix every basis class of degree ≤ `degree` on either side.
    pub fn new(source: Arc<FreeBimoduleComplex>, bar: Arc<BarComplex>, degree: usize) -> Result<Self, OracleError> {
        let target = bar.complex().clone();
        let iota = lift_chain_map(&source, &target, BaseMap::Identity, degree)?;
        let pi = lift_chain_map(&target, &source, BaseMap::Identity, degree)?;
        let cmp = Comparison { source, bar, iota, pi, degree };
        let top = degree.min(cmp.source.length() - 1).min(target.length() - 1);
        for n in 0..=top {
            for f in cohomology_basis(&cmp.source, n)?.classes {
                if !are_cohomologous(&cmp.source, &cmp.from_bar(&cmp.to_bar(&f)?)?, &f)? {
                    return Err(OracleError::Uncertified(n));
                }
            }
            for g in cohomology_basis(&target, n)?.classes {
                if !are_cohomologous(&target, &cmp.to_bar(&cmp.from_bar(&g)?)?, &g)? {
                    return Err(OracleError::Uncertified(n));
                }
            }
        }
        Ok(cmp)
    }

    pub fn source(&self) -> &Arc<FreeBimoduleComplex> {
        &self.source
    }

    pub fn bar(&self) -> &Arc<BarComplex> {
        &self.bar
    }

    pub fn iota(&self) -> &ChainMap {
        &self.iota
    }

    pub fn pi(&self) -> &ChainMap {
        &self.pi
    }

    /// Highest certified degree.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// f∘π, a cochain on the bar complex.
    pub fn to_bar(&self, f: &Cochain) -> Result<Cochain, OracleError> {
        pull_back(&self.source, self.bar.complex(), &self.pi, f, self.degree)
    }

    /// g∘ι, a cochain on P.
    pub fn from_bar(&self, g: &Cochain) -> Result<Cochain, OracleError> {
        pull_back(self.bar.complex(), &self.source, &self.iota, g, self.degree)
    }
}

/// f∘φ for φ: S → T and a cochain f on T.
fn pull_back(
    target: &FreeBimoduleComplex,
    source: &FreeBimoduleComplex,
    phi: &ChainMap,
    f: &Cochain,
    top: usize,
) -> Result<Cochain, OracleError> {
    let n = f.degree();
    if n > top {
        return Err(OracleError::BeyondTruncation(n));
    }
    if f.values().len() != target.rank(n) {
        return Err(OracleError::Mismatch);
    }
    debug_assert_eq!(phi.images[n].len(), source.rank(n));
    let values = phi.images[n].iter().map(|x| f.evaluate(target, x)).collect();
    Ok(Cochain::new(n, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{coboundary, is_coboundary, periodic_truncated_resolution};
    use crate::foundations::Field;
    use crate::oracle::bar_resolution;

    fn comparison(n: usize) -> Comparison {
        let p = Arc::new(periodic_truncated_resolution(Field::Rational, n, 5).unwrap());
        let bar = Arc::new(bar_resolution(p.algebra().clone(), 5).unwrap());
        Comparison::new(p, bar, 4).unwrap()
    }

    #[test]
    fn round_trip_and_zero() {
        let cmp = comparison(2);
        let p = cmp.source().clone();
        let f = Cochain::single(&p, 1, 0, p.algebra().basis(1));
        assert!(are_cohomologous(&p, &cmp.from_bar(&cmp.to_bar(&f).unwrap()).unwrap(), &f).unwrap());
        assert!(cmp.to_bar(&Cochain::zero(&p, 2)).unwrap().is_zero());
    }

    #[test]
    fn coboundaries_go_to_coboundaries() {
        let cmp = comparison(3);
        let p = cmp.source().clone();
        let alg = p.algebra();
        for (n, v) in [(0, 1), (1, 2), (2, 0), (2, 1)] {
            let b = coboundary(&p, &Cochain::single(&p, n, 0, alg.basis(v))).unwrap();
            assert!(is_coboundary(cmp.bar().complex(), &cmp.to_bar(&b).unwrap()).unwrap());
        }
    }
}
