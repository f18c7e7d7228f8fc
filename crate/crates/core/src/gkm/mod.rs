//! Moment graphs: fixed points joined by edges labelled with isotropy
//! weights. They determine the two lowest strata of the orbit filtration and
//! the equivariant cohomology as the kernel of the difference map.

mod library;

use std::collections::{BTreeMap, BTreeSet};

pub use library::{bundled_fixture, bundled_fixtures, bundled_graphs, bundled_module, bundled_modules};

use crate::atiyah_bredon::{AbError, OrbitFiltrationData};
use crate::io::{parse_matrix, parse_weight, IoError, MatrixJson, MomentGraphJson};
use crate::module::{FpHom, FpModule, FreeModule, ModuleError, PolyMatrix};
use crate::ring::{GradedPoly, PolyDegree};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GkmError {
    #[error("invalid moment graph: {0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Filtration(#[from] AbError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub v: usize,
    pub w: usize,
    pub weight: GradedPoly,
}

/// A connected graph on labelled vertices whose edges carry nonzero linear
/// weights. Weights matter only up to sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentGraph {
    rank: usize,
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl MomentGraph {
    pub fn new(rank: usize, vertices: Vec<String>, edges: Vec<(String, String, GradedPoly)>) -> Result<Self, GkmError> {
        if vertices.is_empty() {
            return Err(GkmError::Invalid("no vertices".into()));
        }
        let index: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        if index.len() != vertices.len() {
            return Err(GkmError::Invalid("repeated vertex label".into()));
        }
        let mut out = Vec::with_capacity(edges.len());
        for (k, (v, w, weight)) in edges.into_iter().enumerate() {
            let find = |label: &str| {
                index
                    .get(label)
                    .copied()
                    .ok_or_else(|| GkmError::Invalid(format!("edge {k} names unknown vertex {label:?}")))
            };
            let (v, w) = (find(&v)?, find(&w)?);
            if v == w {
                return Err(GkmError::Invalid(format!("edge {k} is a loop")));
            }
            if weight.rank() != rank || weight.is_zero() || weight.degree() != PolyDegree::Homogeneous(2) {
                return Err(GkmError::Invalid(format!("edge {k} weight must be a nonzero linear form")));
            }
            out.push(Edge { v, w, weight });
        }
        let g = MomentGraph {
            rank,
            vertices,
            edges: out,
        };
        if !g.is_connected() {
            return Err(GkmError::Invalid("graph is not connected".into()));
        }
        Ok(g)
    }

    pub fn from_json(j: &MomentGraphJson) -> Result<Self, GkmError> {
        let edges = j
            .edges
            .iter()
            .map(|e| Ok((e.v.clone(), e.w.clone(), parse_weight(&e.weight, j.rank)?)))
            .collect::<Result<Vec<_>, IoError>>()?;
        MomentGraph::new(j.rank, j.vertices.clone(), edges)
    }

    pub fn to_json(&self) -> MomentGraphJson {
        MomentGraphJson {
            rank: self.rank,
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| crate::io::EdgeJson {
                    v: self.vertices[e.v].clone(),
                    w: self.vertices[e.w].clone(),
                    weight: e.weight.to_string(),
                })
                .collect(),
        }
    }

    fn is_connected(&self) -> bool {
        let mut seen = BTreeSet::from([0]);
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for e in &self.edges {
                for (a, b) in [(e.v, e.w), (e.w, e.v)] {
                    if a == x && seen.insert(b) {
                        stack.push(b);
                    }
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The same graph with the weight of edge `k` negated.
    pub fn flip_sign(&self, k: usize) -> MomentGraph {
        let mut g = self.clone();
        g.edges[k].weight = -&g.edges[k].weight;
        g
    }

    /// `d_0: ⊕_v R -> ⊕_e R/(α_e)`, `f ↦ f(v_e) - f(w_e)`, all generators in
    /// degree 0.
    fn difference_map(&self) -> FpHom {
        let r = self.rank;
        let ab0 = FpModule::free(FreeModule::new(r, vec![0; self.vertices.len()]));
        let n = self.edges.len();
        let relations: Vec<Vec<GradedPoly>> = self
            .edges
            .iter()
            .enumerate()
            .map(|(k, e)| (0..n).map(|j| if j == k { e.weight.clone() } else { GradedPoly::zero(r) }).collect())
            .collect();
        let ab1 = FpModule::from_relations(FreeModule::new(r, vec![0; n]), &relations)
            .expect("linear weights on degree-0 generators are homogeneous");
        let mut m = PolyMatrix::zeros(r, n, self.vertices.len());
        for (k, e) in self.edges.iter().enumerate() {
            m.set(k, e.v, GradedPoly::one(r));
            m.set(k, e.w, -GradedPoly::one(r));
        }
        FpHom::new(ab0, ab1, m).expect("d_0 is degree-preserving")
    }
}

/// `H_T^*(X)` as the kernel of the difference map, with its inclusion into
/// the functions on the vertices.
pub fn gkm_cohomology_with_inclusion(g: &MomentGraph) -> Result<(FpModule, FpHom), GkmError> {
    Ok(g.difference_map().kernel()?)
}

pub fn gkm_cohomology(g: &MomentGraph) -> Result<FpModule, GkmError> {
    Ok(gkm_cohomology_with_inclusion(g)?.0)
}

/// Whether the constant functions lie in the computed cohomology, tested
/// by membership of the diagonal vector in the span of its generators.
pub fn contains_constants(g: &MomentGraph) -> Result<bool, GkmError> {
    let (_, inclusion) = gkm_cohomology_with_inclusion(g)?;
    let n = g.vertices.len();
    let free = FreeModule::new(g.rank, vec![0; n]);
    let gb = crate::module::GroebnerBasis::compute(&free, &inclusion.matrix().columns(), &Default::default())?;
    Ok(gb.contains(&vec![GradedPoly::one(g.rank); n]))
}

/// Strata 0 and 1 from the graph, zero above. The result is flagged
/// truncated when higher strata could be nonzero, that is for `r >= 2` and a
/// graph with edges.
pub fn gkm_to_filtration(g: &MomentGraph) -> Result<OrbitFiltrationData, GkmError> {
    with_higher_strata(g, Vec::new(), &[])
}

/// Like [`gkm_to_filtration`] with strata `2..=r` supplied, together with
/// the differentials `d_1, ..., d_{r-1}` (rows are target generators).
/// Supplying no strata leaves the data truncated.
pub fn with_higher_strata(
    g: &MomentGraph,
    higher: Vec<FpModule>,
    differentials: &[MatrixJson],
) -> Result<OrbitFiltrationData, GkmError> {
    let r = g.rank;
    let d0 = g.difference_map();
    let (total, inclusion) = gkm_cohomology_with_inclusion(g)?;
    let mut strata = vec![d0.source().clone()];
    if r >= 1 {
        strata.push(d0.target().clone());
    }
    let supplied = !higher.is_empty();
    if supplied && (higher.len() + 1 != r || differentials.len() + 1 != r) {
        return Err(GkmError::Invalid(format!(
            "{} higher strata and {} differentials supplied, expected {} and {}",
            higher.len(),
            differentials.len(),
            r.saturating_sub(1),
            r.saturating_sub(1)
        )));
    }
    if !supplied && !differentials.is_empty() {
        return Err(GkmError::Invalid("differentials given without strata".into()));
    }
    let truncated = !supplied && r >= 2 && !g.edges.is_empty();
    if supplied {
        strata.extend(higher);
    } else {
        strata.extend((2..=r).map(|_| FpModule::zero(r)));
    }
    let mut maps = Vec::new();
    if r >= 1 {
        maps.push(d0);
    }
    for i in 1..r {
        let (s, t) = (&strata[i], &strata[i + 1]);
        let hom = if supplied {
            let m = parse_matrix(&differentials[i - 1], r, t.num_generators(), s.num_generators())?;
            FpHom::new(s.clone(), t.clone(), m)?
        } else {
            FpHom::zero(s, t)
        };
        maps.push(hom);
    }
    Ok(OrbitFiltrationData::new(strata, maps, total, inclusion)?.mark_truncated(truncated))
}

#[cfg(test)]
mod tests;
