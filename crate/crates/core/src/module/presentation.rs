use num_traits::Zero;

use super::syzygy::minimal_generators;
use super::{FpModule, FreeModule, ModuleError, PolyMatrix};
use crate::ring::{GradedPoly, Rational};

/// A minimal presentation of a module together with the mutually inverse
/// isomorphisms to the original.
#[derive(Clone, Debug)]
pub struct Minimized {
    pub module: FpModule,
    /// Images of the original generators, written in the minimal ones.
    pub to_minimal: PolyMatrix,
    /// Images of the minimal generators, written in the original ones.
    pub from_minimal: PolyMatrix,
}

/// Removes generators killed by a unit relation, then drops redundant
/// relations, until no relation has a unit entry and the relations form a
/// minimal generating set.
pub fn minimize_presentation(m: &FpModule) -> Minimized {
    try_minimize(m).expect("minimizing a valid presentation cannot fail")
}

fn try_minimize(m: &FpModule) -> Result<Minimized, ModuleError> {
    let r = m.ring_rank();
    let n0 = m.num_generators();
    let mut degrees = m.generators().degrees().to_vec();
    let mut original: Vec<usize> = (0..n0).collect();
    let mut cols = m.relations();
    let mut express: Vec<Vec<GradedPoly>> = (0..n0)
        .map(|o| (0..n0).map(|k| if k == o { GradedPoly::one(r) } else { GradedPoly::zero(r) }).collect())
        .collect();

    while let Some((j, i)) = find_unit(&cols) {
        let pivot = cols.remove(j);
        let inv: Rational = pivot[i].constant_term().recip();
        for col in cols.iter_mut() {
            if col[i].is_zero() {
                continue;
            }
            let q = col[i].scale(&inv);
            for (k, p) in pivot.iter().enumerate() {
                if !p.is_zero() {
                    col[k] = &col[k] - &(&q * p);
                }
            }
        }
        // e_i = -(1/c) * sum_{k != i} pivot[k] e_k in the quotient
        for v in express.iter_mut() {
            if v[i].is_zero() {
                continue;
            }
            let a = v[i].scale(&inv);
            for (k, p) in pivot.iter().enumerate() {
                if k != i && !p.is_zero() {
                    v[k] = &v[k] - &(&a * p);
                }
            }
        }
        for col in cols.iter_mut() {
            col.remove(i);
        }
        for v in express.iter_mut() {
            v.remove(i);
        }
        degrees.remove(i);
        original.remove(i);
    }

    let free = FreeModule::new(r, degrees);
    let cols: Vec<Vec<GradedPoly>> = cols.into_iter().filter(|c| c.iter().any(|p| !p.is_zero())).collect();
    let kept = minimal_generators(&free, &cols)?;
    let relations: Vec<Vec<GradedPoly>> = kept.iter().map(|&k| cols[k].clone()).collect();
    let module = FpModule::from_relations(free, &relations)?;

    let n = module.num_generators();
    let to_minimal = PolyMatrix::from_columns(r, n, &express);
    let mut from_minimal = PolyMatrix::zeros(r, n0, n);
    for (k, &o) in original.iter().enumerate() {
        from_minimal.set(o, k, GradedPoly::one(r));
    }
    Ok(Minimized {
        module,
        to_minimal,
        from_minimal,
    })
}

fn find_unit(cols: &[Vec<GradedPoly>]) -> Option<(usize, usize)> {
    cols.iter()
        .enumerate()
        .find_map(|(j, c)| c.iter().position(|p| !p.constant_term().is_zero()).map(|i| (j, i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::FpHom;
    use crate::ring::parse_poly;

    fn module(r: usize, gens: Vec<i64>, rels: &[&[&str]]) -> FpModule {
        let rels: Vec<Vec<GradedPoly>> = rels
            .iter()
            .map(|v| v.iter().map(|s| parse_poly(s, r).unwrap()).collect())
            .collect();
        FpModule::from_relations(FreeModule::new(r, gens), &rels).unwrap()
    }

    #[test]
    fn unit_relation_removes_a_generator() {
        let m = module(2, vec![0, 2], &[&["t1", "1"], &["t2^2", "t2"]]);
        let min = minimize_presentation(&m);
        assert_eq!(min.module.generators().degrees(), &[0]);
        // t2^2 e0 + t2 e1 = t2^2 e0 - t1 t2 e0
        assert_eq!(min.module.relations(), vec![vec![parse_poly("t2^2-t1*t2", 2).unwrap()]]);
        for d in -2..=8 {
            assert_eq!(min.module.dim_in_degree(d), m.dim_in_degree(d));
        }
        let to = FpHom::new(m.clone(), min.module.clone(), min.to_minimal.clone()).unwrap();
        let from = FpHom::new(min.module.clone(), m.clone(), min.from_minimal.clone()).unwrap();
        assert!(to.is_isomorphism().unwrap());
        assert!(from.is_isomorphism().unwrap());
    }

    #[test]
    fn redundant_relations_are_dropped() {
        let m = module(1, vec![0], &[&["t1"], &["t1^2"], &["0"]]);
        let min = minimize_presentation(&m);
        assert_eq!(min.module.relation_degrees(), &[2]);
    }

    #[test]
    fn zero_module_minimizes_to_nothing() {
        let m = module(2, vec![0, 0], &[&["1", "1"], &["1", "-1"]]);
        let min = minimize_presentation(&m);
        assert_eq!(min.module.num_generators(), 0);
        assert!(m.is_zero());
    }
}
