use super::groebner::{check_vector, dense, Buchberger, TermOrder};
use super::{FreeModule, GradedHom, GroebnerBasis, ModuleError, PolyMatrix};
use crate::ring::{GradedPoly, ModuleOrder};

/// Positions of a minimal generating subset of the submodule spanned by
/// `gens`, in increasing degree.
///
/// Generators are scanned degree by degree; one is kept only when it is not
/// already in the span of the kept ones, tested against a Gröbner basis that
/// is complete up to the current degree.
pub fn minimal_generators(free: &FreeModule, gens: &[Vec<GradedPoly>]) -> Result<Vec<usize>, ModuleError> {
    let mut order: Vec<(i64, usize)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        check_vector(free, g, i)?;
        if let Some(d) = free.vector_degree(g) {
            order.push((d, i));
        }
    }
    order.sort();
    let tord = TermOrder::new(&ModuleOrder::default(), free);
    let mut bb = Buchberger::new(tord.clone());
    let mut kept = Vec::new();
    for (d, i) in order {
        bb.run(Some(d));
        if bb.insert(tord.sparse(&gens[i])) {
            kept.push(i);
        }
    }
    Ok(kept)
}

/// A minimal generating set of the kernel of `h`, as a map onto it.
///
/// The kernel is read off a Gröbner basis of the graph `{(h(x), x)}` in
/// `target ⊕ source` under a position-over-term order that ranks the target
/// positions first: basis elements with no target part span the kernel.
pub fn syzygies(h: &GradedHom) -> Result<GradedHom, ModuleError> {
    kernel_map(h, true)
}

/// Like [`syzygies`], keeping every kernel element the elimination produces.
pub(crate) fn kernel_generators(h: &GradedHom) -> Result<GradedHom, ModuleError> {
    kernel_map(h, false)
}

fn kernel_map(h: &GradedHom, prune: bool) -> Result<GradedHom, ModuleError> {
    let (source, target) = (h.source(), h.target());
    let r = source.ring_rank();
    let g = target.rank();
    let ambient = target.direct_sum(source);
    let graph: Vec<Vec<GradedPoly>> = (0..source.rank())
        .map(|j| {
            let mut v = h.matrix().column(j);
            v.extend((0..source.rank()).map(|k| {
                if k == j {
                    GradedPoly::one(r)
                } else {
                    GradedPoly::zero(r)
                }
            }));
            v
        })
        .collect();
    let gb = GroebnerBasis::compute(&ambient, &graph, &ModuleOrder::default())?;
    let tord = gb.term_order();
    let kernel: Vec<Vec<GradedPoly>> = gb
        .elements()
        .into_iter()
        .map(|v| tord.sparse(&v))
        .filter(|v| v.iter().all(|(t, _)| t.comp >= g))
        .map(|v| dense(&v, &ambient)[g..].to_vec())
        .collect();
    let kept = if prune {
        minimal_generators(source, &kernel)?
    } else {
        (0..kernel.len()).collect()
    };
    let columns: Vec<Vec<GradedPoly>> = kept.iter().map(|&i| kernel[i].clone()).collect();
    let degrees = columns
        .iter()
        .map(|c| source.vector_degree(c).expect("kernel generators are nonzero and homogeneous"))
        .collect();
    GradedHom::new(
        FreeModule::new(r, degrees),
        source.clone(),
        PolyMatrix::from_columns(r, source.rank(), &columns),
    )
}
