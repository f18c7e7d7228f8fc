use std::collections::BTreeMap;

use super::linalg::{self, SparseRow};
use super::{FpHom, FpModule, PolyMatrix};
use crate::ring::{GradedPoly, Rational};

/// A basis of the degree-preserving homomorphisms `M -> N`.
///
/// Each generator of `M` may go to any element of `N` of its degree, written
/// in the standard-term basis of `N`; the homomorphism condition is that
/// every relation of `M` maps to zero, which is linear in those coordinates.
pub fn hom_space_in_degree_zero(m: &FpModule, n: &FpModule) -> Vec<FpHom> {
    let r = m.ring_rank();
    let mut unknowns = Vec::new();
    for (j, &g) in m.generators().degrees().iter().enumerate() {
        for (comp, mono) in n.slice_basis(g) {
            unknowns.push((j, comp, mono));
        }
    }
    let mut equations: BTreeMap<(usize, usize), SparseRow> = BTreeMap::new();
    let rel_degrees = m.relation_degrees();
    for (rel_index, rel) in m.relations().iter().enumerate() {
        let basis = n.slice_basis(rel_degrees[rel_index]);
        for (u, (j, comp, mono)) in unknowns.iter().enumerate() {
            if rel[*j].is_zero() {
                continue;
            }
            let mut v = vec![GradedPoly::zero(r); n.num_generators()];
            v[*comp] = rel[*j].mul_monomial(mono);
            for (k, c) in n.coordinates(&v, &basis).into_iter().enumerate() {
                if !num_traits::Zero::is_zero(&c) {
                    equations.entry((rel_index, k)).or_default().push((u, c));
                }
            }
        }
    }
    let kernel = linalg::nullspace(equations.into_values(), unknowns.len());
    kernel
        .into_iter()
        .map(|x| {
            let mut matrix = PolyMatrix::zeros(r, n.num_generators(), m.num_generators());
            for (u, c) in x {
                let (j, comp, mono) = &unknowns[u];
                let entry = matrix.get(*comp, *j) + &GradedPoly::monomial(r, mono.clone(), c);
                matrix.set(*comp, *j, entry);
            }
            FpHom::new_unchecked(m.clone(), n.clone(), matrix)
        })
        .collect()
}

/// `sum c_k * homs[k]`, all with the same source and target.
pub(crate) fn combine(homs: &[FpHom], coeffs: &[Rational]) -> FpHom {
    let first = &homs[0];
    let mut matrix = PolyMatrix::zeros(first.source().ring_rank(), first.matrix().rows(), first.matrix().cols());
    for (h, c) in homs.iter().zip(coeffs) {
        matrix = matrix.add(&h.matrix().scale(c));
    }
    FpHom::new_unchecked(first.source().clone(), first.target().clone(), matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::FreeModule;
    use crate::ring::parse_poly;

    fn cyclic(r: usize, rel: &str) -> FpModule {
        FpModule::from_relations(FreeModule::new(r, vec![0]), &[vec![parse_poly(rel, r).unwrap()]]).unwrap()
    }

    #[test]
    fn endomorphisms_of_free_cyclic() {
        let f = FpModule::free(FreeModule::new(2, vec![0]));
        assert_eq!(hom_space_in_degree_zero(&f, &f).len(), 1);
    }

    #[test]
    fn torsion_into_free_is_zero() {
        let m = cyclic(1, "t1");
        let f = FpModule::free(FreeModule::new(1, vec![0]));
        assert!(hom_space_in_degree_zero(&m, &f).is_empty());
    }

    #[test]
    fn endomorphisms_of_truncation() {
        // degree-0 maps of R/(t^2) are determined by the image of 1 in degree 0
        let m = cyclic(1, "t1^2");
        let homs = hom_space_in_degree_zero(&m, &m);
        assert_eq!(homs.len(), 1);
        for h in &homs {
            assert!(FpHom::new(m.clone(), m.clone(), h.matrix().clone()).is_ok());
        }
    }

    #[test]
    fn maps_from_a_shifted_free_module() {
        // Hom_0(R[2], R/(t1^2)) over r = 2 is the degree-2 piece: t1, t2
        let src = FpModule::free(FreeModule::new(2, vec![2]));
        let tgt = cyclic(2, "t1^2");
        assert_eq!(hom_space_in_degree_zero(&src, &tgt).len(), 2);
    }
}
