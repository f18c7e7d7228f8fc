//! Degree slices by plain linear algebra.
//!
//! Everything here works from the presentation matrices alone: the degree-`d`
//! piece of a free module has the monomial basis, and each quotient or
//! (co)homology dimension is a difference of ranks of explicit rational
//! matrices. No Gröbner basis is consulted, which makes these functions an
//! independent check on the rest of the crate.

use std::collections::HashMap;

use super::linalg::{self, SparseRow};
use super::{FpHom, FpModule, FreeModule, PolyMatrix};
use crate::ring::Monomial;

/// Monomial basis `m * e_i` of the degree-`d` piece of a free module.
pub fn free_basis(free: &FreeModule, d: i64) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for (i, &g) in free.degrees().iter().enumerate() {
        for m in Monomial::all_of_degree(free.ring_rank(), d - g) {
            out.push((i, m));
        }
    }
    out
}

/// Rows spanning the degree-`d` part of the submodule generated by the
/// columns of `matrix`, whose degrees are `sources`.
pub fn span_rows(target: &FreeModule, sources: &FreeModule, matrix: &PolyMatrix, d: i64) -> Vec<SparseRow> {
    let index: HashMap<(usize, Monomial), usize> = free_basis(target, d)
        .into_iter()
        .enumerate()
        .map(|(k, b)| (b, k))
        .collect();
    let r = target.ring_rank();
    let mut rows = Vec::new();
    for j in 0..sources.rank() {
        let col = matrix.column(j);
        for m in Monomial::all_of_degree(r, d - sources.degree(j)) {
            let mut row: SparseRow = Vec::new();
            for (i, p) in col.iter().enumerate() {
                for (u, c) in p.terms() {
                    if let Some(&k) = index.get(&(i, u.mul(&m))) {
                        row.push((k, c.clone()));
                    }
                }
            }
            row.sort_by_key(|(k, _)| *k);
            rows.push(row);
        }
    }
    rows
}

fn relation_rows(m: &FpModule, d: i64) -> Vec<SparseRow> {
    let p = m.presentation();
    span_rows(p.target(), p.source(), p.matrix(), d)
}

/// `dim_Q M_d`.
pub fn module_dim(m: &FpModule, d: i64) -> usize {
    free_basis(m.generators(), d).len() - linalg::rank(relation_rows(m, d))
}

/// Rank of `f` on degree-`d` pieces.
pub fn hom_rank(f: &FpHom, d: i64) -> usize {
    let target = f.target();
    let rel = relation_rows(target, d);
    let rel_rank = linalg::rank(rel.clone());
    let images = span_rows(target.generators(), f.source().generators(), f.matrix(), d);
    linalg::rank(rel.into_iter().chain(images)) - rel_rank
}

/// `dim_Q` of `ker(outgoing) / im(incoming)` in degree `d`.
pub fn homology_dim(module: &FpModule, incoming: Option<&FpHom>, outgoing: Option<&FpHom>, d: i64) -> usize {
    let dim = module_dim(module, d);
    let out = outgoing.map_or(0, |f| hom_rank(f, d));
    let inc = incoming.map_or(0, |f| hom_rank(f, d));
    dim - out - inc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_poly, GradedPoly};

    #[test]
    fn quotient_dimensions() {
        let rels = vec![vec![parse_poly("t1^2", 2).unwrap()], vec![parse_poly("t1*t2", 2).unwrap()]];
        let m = FpModule::from_relations(FreeModule::new(2, vec![0]), &rels).unwrap();
        let dims: Vec<usize> = (0..=8).map(|d| module_dim(&m, d)).collect();
        // basis 1 | t1, t2 | t2^2 | t2^3 | t2^4 in even degrees
        assert_eq!(dims, vec![1, 0, 2, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn homology_of_multiplication() {
        let r = 1;
        let a = FpModule::free(FreeModule::new(r, vec![2]));
        let b = FpModule::free(FreeModule::new(r, vec![0]));
        let t = PolyMatrix::from_rows(r, 1, &[vec![GradedPoly::var(r, 0)]]);
        let f = FpHom::new(a, b.clone(), t).unwrap();
        assert_eq!(homology_dim(&b, Some(&f), None, 0), 1);
        assert_eq!(homology_dim(&b, Some(&f), None, 2), 0);
    }
}
