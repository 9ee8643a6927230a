use std::sync::Arc;

use super::OracleError;
use crate::algebra::GradedAlgebra;
use crate::complexes::{ComplexKind, FreeBimoduleComplex, FreeElement};

/// dim(R)^{N+2} may not exceed this many k-dimensions.
pub const BAR_SIZE_GUARD: u64 = 1_000_000;

/// The un-normalized bar resolution truncated at degree N. Generators of degree
/// n are tuples (r_1, …, r_n) of basis indices, numbered in base dim(R) with r_1
/// most significant.
#[derive(Clone, Debug)]
pub struct BarComplex {
    algebra: Arc<GradedAlgebra>,
    truncation: usize,
    complex: Arc<FreeBimoduleComplex>,
}

impl BarComplex {
    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn complex(&self) -> &Arc<FreeBimoduleComplex> {
        &self.complex
    }

    pub fn tuple(&self, n: usize, g: usize) -> Vec<usize> {
        decode(self.algebra.dim(), n, g)
    }

    pub fn index_of(&self, tuple: &[usize]) -> usize {
        encode(self.algebra.dim(), tuple)
    }
}

pub(crate) fn decode(dim: usize, n: usize, mut g: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = g % dim;
        g /= dim;
    }
    t
}

pub(crate) fn encode(dim: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &r| acc * dim + r)
}

/// d(1⊗r_1⊗…⊗r_n⊗1) = r_1·(r_2…r_n) + Σ_i (−1)^i (…, r_i r_{i+1}, …) + (−1)^n (r_1…r_{n−1})·r_n.
pub fn bar_resolution(algebra: Arc<GradedAlgebra>, truncation: usize) -> Result<BarComplex, OracleError> {
    let dim = algebra.dim();
    let too_large = || OracleError::TooLarge { dim, truncation };
    let size = (dim as u64).checked_pow(truncation as u32 + 2).ok_or_else(too_large)?;
    if size > BAR_SIZE_GUARD {
        return Err(too_large());
    }
    let field = algebra.field();
    let grp = algebra.group();
    let one = field.one();
    let unit = algebra.unit();

    let mut gen_degrees = Vec::with_capacity(truncation + 1);
    let mut differential = Vec::with_capacity(truncation + 1);
    let mut names = Vec::with_capacity(truncation + 1);
    for n in 0..=truncation {
        let rank = dim.pow(n as u32);
        let mut degs = Vec::with_capacity(rank);
        let mut ds = Vec::with_capacity(if n == 0 { 0 } else { rank });
        let mut ns = Vec::with_capacity(rank);
        for g in 0..rank {
            let t = decode(dim, n, g);
            degs.push(t.iter().fold(grp.zero(), |acc, &r| grp.add(&acc, algebra.degree(r))));
            let labels: Vec<&str> = t.iter().map(|&r| algebra.label(r)).collect();
            ns.push(format!("[{}]", labels.join("|")));
            if n == 0 {
                continue;
            }
            let mut d = FreeElement::new();
            d.add_term(encode(dim, &t[1..]), t[0], unit, one.clone());
            for i in 0..n - 1 {
                let sign = if (i + 1) % 2 == 0 { one.clone() } else { -one.clone() };
                for (k, c) in algebra.mul_basis(t[i], t[i + 1]) {
                    let mut merged = t[..i].to_vec();
                    merged.push(*k);
                    merged.extend_from_slice(&t[i + 2..]);
                    d.add_term(encode(dim, &merged), unit, unit, c * &sign);
                }
            }
            let sign = if n % 2 == 0 { one.clone() } else { -one.clone() };
            d.add_term(encode(dim, &t[..n - 1]), unit, t[n - 1], sign);
            ds.push(d);
        }
        gen_degrees.push(degs);
        differential.push(ds);
        names.push(ns);
    }
    let complex = FreeBimoduleComplex::new(algebra.clone(), gen_degrees, differential, vec![algebra.one()])?
        .with_kind(ComplexKind::Bar)
        .with_names(names);
    Ok(BarComplex { algebra, truncation, complex: Arc::new(complex) })
}
