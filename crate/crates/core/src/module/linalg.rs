//! Sparse exact linear algebra over `Q`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::ring::Rational;

/// A sparse vector: `(column, value)` pairs with strictly increasing columns
/// and no zero values.
pub type SparseRow = Vec<(usize, Rational)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SparseRow, n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// `a - c * b`.
fn axpy(a: &SparseRow, c: &Rational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally built row echelon form. Each stored row is monic at its
/// leading column and no two rows share a leading column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Eliminates every entry that sits in a pivot column.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut i = 0;
        while i < row.len() {
            match self.pivots.get(&row[i].0) {
                Some(p) => {
                    let c = row[i].1.clone();
                    row = axpy(&row, &c, p);
                }
                None => i += 1,
            }
        }
        row
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds a row; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = self.reduce(row);
        let Some((lead, c)) = row.first().cloned() else {
            return false;
        };
        if !c.is_one() {
            let inv = c.recip();
            for (_, v) in row.iter_mut() {
                *v *= &inv;
            }
        }
        self.pivots.insert(lead, row);
        true
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduced row echelon rows keyed by pivot column.
    pub fn reduced_rows(&self) -> BTreeMap<usize, SparseRow> {
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&lead, row) in self.pivots.iter().rev() {
            let mut row = row.clone();
            let mut i = 1;
            while i < row.len() {
                match done.get(&row[i].0) {
                    Some(p) => {
                        let c = row[i].1.clone();
                        row = axpy(&row, &c, p);
                    }
                    None => i += 1,
                }
            }
            done.insert(lead, row);
        }
        done
    }
}

/// Rank of the span of `rows`.
pub fn rank<I: IntoIterator<Item = SparseRow>>(rows: I) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of `{x in Q^ncols : row . x = 0 for every row}`.
pub fn nullspace<I: IntoIterator<Item = SparseRow>>(rows: I, ncols: usize) -> Vec<SparseRow> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    let reduced = e.reduced_rows();
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !reduced.contains_key(c)) {
        let mut x: SparseRow = Vec::new();
        for (&p, row) in &reduced {
            if let Some((_, v)) = row.iter().find(|(c, _)| *c == free) {
                x.push((p, -v.clone()));
            }
        }
        x.push((free, Rational::one()));
        x.sort_by_key(|(c, _)| *c);
        out.push(x);
    }
    out
}
