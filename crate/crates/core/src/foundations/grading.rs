//! Finitely generated abelian grading groups ℤ^r ⊕ ⊕ ℤ/m_i and their elements.

use std::fmt;

use super::FoundationError;

/// A finitely generated abelian group, stored as a list of cyclic factors.
///
/// A factor of order `0` is a copy of ℤ. Groups built with [`GradingGroup::new`]
/// list the free factors first; direct sums simply concatenate factor lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingGroup {
    orders: Vec<u64>,
}

impl GradingGroup {
    pub fn new(free_rank: usize, torsion: &[u64]) -> Result<Self, FoundationError> {
        if let Some(&m) = torsion.iter().find(|&&m| m < 2) {
            return Err(FoundationError::BadTorsion(m));
        }
        let mut orders = vec![0; free_rank];
        orders.extend_from_slice(torsion);
        Ok(GradingGroup { orders })
    }

    /// The trivial group (ungraded algebras).
    pub fn trivial() -> Self {
        GradingGroup { orders: Vec::new() }
    }

    pub fn integers() -> Self {
        GradingGroup { orders: vec![0] }
    }

    pub fn from_orders(orders: Vec<u64>) -> Result<Self, FoundationError> {
        if let Some(&m) = orders.iter().find(|&&m| m == 1) {
            return Err(FoundationError::BadTorsion(m));
        }
        Ok(GradingGroup { orders })
    }

    /// Cyclic factor orders, `0` standing for ℤ.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn free_rank(&self) -> usize {
        self.orders.iter().filter(|&&m| m == 0).count()
    }

    pub fn torsion(&self) -> Vec<u64> {
        self.orders.iter().copied().filter(|&m| m != 0).collect()
    }

    pub fn direct_sum(&self, other: &GradingGroup) -> GradingGroup {
        let mut orders = self.orders.clone();
        orders.extend_from_slice(&other.orders);
        GradingGroup { orders }
    }

    pub fn zero(&self) -> Degree {
        Degree(vec![0; self.orders.len()])
    }

    /// The `i`-th cyclic generator.
    pub fn generator(&self, i: usize) -> Degree {
        let mut c = vec![0; self.orders.len()];
        c[i] = 1;
        self.reduce(Degree(c))
    }

    /// Builds an element from raw coordinates, reducing torsion residues.
    pub fn element(&self, coords: &[i64]) -> Result<Degree, FoundationError> {
        if coords.len() != self.orders.len() {
            return Err(FoundationError::GroupMismatch {
                expected: self.orders.len(),
                found: coords.len(),
            });
        }
        Ok(self.reduce(Degree(coords.to_vec())))
    }

    fn reduce(&self, mut d: Degree) -> Degree {
        for (c, &m) in d.0.iter_mut().zip(&self.orders) {
            if m != 0 {
                *c = c.rem_euclid(m as i64);
            }
        }
        d
    }

    /// Whether `d` is a well-formed element of this group.
    pub fn contains(&self, d: &Degree) -> bool {
        d.0.len() == self.orders.len()
            && d
                .0
                .iter()
                .zip(&self.orders)
                .all(|(&c, &m)| m == 0 || (0..m as i64).contains(&c))
    }

    pub fn check(&self, d: &Degree) -> Result<(), FoundationError> {
        if self.contains(d) {
            Ok(())
        } else {
            Err(FoundationError::GroupMismatch {
                expected: self.orders.len(),
                found: d.0.len(),
            })
        }
    }

    pub fn add(&self, a: &Degree, b: &Degree) -> Degree {
        debug_assert_eq!(a.0.len(), self.orders.len());
        debug_assert_eq!(b.0.len(), self.orders.len());
        self.reduce(Degree(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect()))
    }

    pub fn sub(&self, a: &Degree, b: &Degree) -> Degree {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Degree) -> Degree {
        self.reduce(Degree(a.0.iter().map(|x| -x).collect()))
    }

    pub fn scale(&self, a: &Degree, k: i64) -> Degree {
        self.reduce(Degree(a.0.iter().map(|x| x * k).collect()))
    }

    /// Splits an element of `self ⊕ other` into its two components.
    pub fn split(&self, d: &Degree) -> (Degree, Degree) {
        let (a, b) = d.0.split_at(self.orders.len());
        (Degree(a.to_vec()), Degree(b.to_vec()))
    }

    pub fn concat(a: &Degree, b: &Degree) -> Degree {
        let mut c = a.0.clone();
        c.extend_from_slice(&b.0);
        Degree(c)
    }
}

impl fmt::Display for GradingGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self
            .orders
            .iter()
            .map(|&m| if m == 0 { "Z".to_string() } else { format!("Z/{m}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// An element of a [`GradingGroup`]: coordinates on the cyclic factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree(pub Vec<i64>);

impl Degree {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Parses the bracketed tuple syntax `[a,b,...]`.
    pub fn parse(text: &str) -> Result<Degree, FoundationError> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| FoundationError::BadDegree(t.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Degree(Vec::new()));
        }
        inner
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map(Degree)
            .map_err(|_| FoundationError::BadDegree(t.to_string()))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
