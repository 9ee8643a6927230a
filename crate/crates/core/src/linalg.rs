//! Sparse exact linear algebra: incremental column echelon forms with
//! deterministic pivoting, used for ranks, kernels and linear solves.

use std::collections::{BTreeMap, HashMap};

use crate::foundations::{Field, Scalar};

/// A sparse vector; zero entries are never stored.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// `target += c · source`.
pub fn add_scaled(target: &mut SparseVec, source: &SparseVec, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    for (&k, v) in source {
        let term = c * v;
        match target.get_mut(&k) {
            Some(e) => {
                *e += &term;
                if e.is_zero() {
                    target.remove(&k);
                }
            }
            None => {
                target.insert(k, term);
            }
        }
    }
}

pub fn add_entry(target: &mut SparseVec, k: usize, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match target.get_mut(&k) {
        Some(e) => {
            *e += &c;
            if e.is_zero() {
                target.remove(&k);
            }
        }
        None => {
            target.insert(k, c);
        }
    }
}

pub fn scaled(v: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(&k, x)| (k, x * c)).collect()
}

pub fn difference(a: &SparseVec, b: &SparseVec, field: Field) -> SparseVec {
    let mut out = a.clone();
    add_scaled(&mut out, b, &field.from_i64(-1));
    out
}

struct Row {
    vector: SparseVec,
    /// Combination of inserted columns producing `vector`.
    combination: SparseVec,
}

/// Column echelon form of a growing list of vectors.
///
/// Every stored vector has a distinct pivot (its smallest index) normalized to 1.
/// Columns are processed in insertion order and pivots are the first nonzero
/// entry, so every result is reproducible.
pub struct Echelon {
    field: Field,
    rows: Vec<Row>,
    by_pivot: HashMap<usize, usize>,
    kernel: Vec<SparseVec>,
    columns: usize,
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
            by_pivot: HashMap::new(),
            kernel: Vec::new(),
            columns: 0,
        }
    }

    /// Inserts the columns of a matrix in order.
    pub fn from_columns<I: IntoIterator<Item = SparseVec>>(field: Field, columns: I) -> Self {
        let mut e = Echelon::new(field);
        for c in columns {
            e.insert(c);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        self.columns
    }

    /// Basis of the kernel of the matrix whose columns were inserted.
    pub fn kernel(&self) -> &[SparseVec] {
        &self.kernel
    }

    /// Reduces `v` against the stored rows; returns the remainder and the
    /// combination of inserted columns that was subtracted.
    fn reduce(&self, mut v: SparseVec) -> (SparseVec, SparseVec) {
        let mut used = SparseVec::new();
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).next().map(|(&k, c)| (k, c.clone()));
            let Some((k, c)) = next else { break };
            if let Some(&ri) = self.by_pivot.get(&k) {
                let row = &self.rows[ri];
                add_scaled(&mut v, &row.vector, &-&c);
                add_scaled(&mut used, &row.combination, &c);
            }
            cursor = k + 1;
        }
        (v, used)
    }

    /// Adds a column; returns `true` when it increased the rank.
    pub fn insert(&mut self, column: SparseVec) -> bool {
        let origin = self.columns;
        self.columns += 1;
        let (rem, used) = self.reduce(column);
        let mut combination = SparseVec::new();
        combination.insert(origin, self.field.one());
        add_scaled(&mut combination, &used, &self.field.from_i64(-1));
        match rem.iter().next() {
            None => {
                self.kernel.push(combination);
                false
            }
            Some((&pivot, lead)) => {
                let inv = lead.inv().expect("nonzero pivot");
                let row = Row {
                    vector: scaled(&rem, &inv),
                    combination: scaled(&combination, &inv),
                };
                self.by_pivot.insert(pivot, self.rows.len());
                self.rows.push(row);
                true
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).0.is_empty()
    }

    /// A solution `x` (indexed by inserted column) of `Σ x_j col_j = b`, if any.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        let (rem, used) = self.reduce(b.clone());
        if rem.is_empty() {
            Some(used)
        } else {
            None
        }
    }
}
