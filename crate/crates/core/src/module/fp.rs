use std::fmt;
use std::sync::{Arc, OnceLock};

use super::syzygy::{minimal_generators, syzygies};
use super::{
    check_degrees, minimal_resolution, minimize_presentation, FreeModule, GradedHom, GroebnerBasis, Minimized,
    ModuleError, PolyMatrix, Resolution,
};
use crate::ring::{GradedPoly, ModuleOrder, Monomial, Rational};

/// A finitely presented graded module: the cokernel of its presentation
/// `F1 -> F0`.
///
/// Cheap to clone. The Gröbner basis of the relations, the minimized
/// presentation and the minimal resolution are computed on first use and
/// cached.
#[derive(Clone)]
pub struct FpModule {
    inner: Arc<Inner>,
}

struct Inner {
    presentation: GradedHom,
    groebner: OnceLock<GroebnerBasis>,
    minimized: OnceLock<Minimized>,
    resolution: OnceLock<Resolution>,
    ext: OnceLock<Vec<FpModule>>,
}

impl FpModule {
    pub fn new(presentation: GradedHom) -> Self {
        FpModule {
            inner: Arc::new(Inner {
                presentation,
                groebner: OnceLock::new(),
                minimized: OnceLock::new(),
                resolution: OnceLock::new(),
                ext: OnceLock::new(),
            }),
        }
    }

    /// The module generated by `generators` subject to `relations`, each
    /// relation a vector with one entry per generator. Zero relations are
    /// dropped.
    pub fn from_relations(generators: FreeModule, relations: &[Vec<GradedPoly>]) -> Result<Self, ModuleError> {
        let r = generators.ring_rank();
        let mut cols = Vec::new();
        let mut degrees = Vec::new();
        for (index, rel) in relations.iter().enumerate() {
            if rel.len() != generators.rank() {
                return Err(ModuleError::Shape(format!(
                    "relation {index} has {} entries for {} generators",
                    rel.len(),
                    generators.rank()
                )));
            }
            if let Some(p) = rel.iter().find(|p| p.rank() != r) {
                return Err(ModuleError::RingRank {
                    expected: r,
                    found: p.rank(),
                });
            }
            if rel.iter().all(GradedPoly::is_zero) {
                continue;
            }
            let d = generators
                .vector_degree(rel)
                .ok_or(ModuleError::Inhomogeneous { index })?;
            degrees.push(d);
            cols.push(rel.clone());
        }
        let matrix = PolyMatrix::from_columns(r, generators.rank(), &cols);
        Ok(FpModule::new(GradedHom::new(FreeModule::new(r, degrees), generators, matrix)?))
    }

    pub fn free(generators: FreeModule) -> Self {
        let r = generators.ring_rank();
        let n = generators.rank();
        FpModule::new(GradedHom {
            source: FreeModule::zero(r),
            target: generators,
            matrix: PolyMatrix::zeros(r, n, 0),
        })
    }

    pub fn zero(ring_rank: usize) -> Self {
        FpModule::free(FreeModule::zero(ring_rank))
    }

    pub fn ring_rank(&self) -> usize {
        self.presentation().target().ring_rank()
    }

    pub fn presentation(&self) -> &GradedHom {
        &self.inner.presentation
    }

    pub fn generators(&self) -> &FreeModule {
        self.presentation().target()
    }

    pub fn num_generators(&self) -> usize {
        self.generators().rank()
    }

    pub fn relation_degrees(&self) -> &[i64] {
        self.presentation().source().degrees()
    }

    pub fn relations(&self) -> Vec<Vec<GradedPoly>> {
        self.presentation().matrix().columns()
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        self.inner.groebner.get_or_init(|| {
            GroebnerBasis::compute(self.generators(), &self.relations(), &ModuleOrder::default())
                .expect("presentation columns are homogeneous")
        })
    }

    pub fn minimized(&self) -> &Minimized {
        self.inner.minimized.get_or_init(|| minimize_presentation(self))
    }

    pub fn minimal_resolution(&self) -> &Resolution {
        self.inner.resolution.get_or_init(|| minimal_resolution(self))
    }

    pub(crate) fn ext_cache(&self) -> &OnceLock<Vec<FpModule>> {
        &self.inner.ext
    }

    pub fn is_zero(&self) -> bool {
        let gb = self.groebner();
        (0..self.num_generators()).all(|i| gb.contains_generator(i))
    }

    /// Whether the relations are already zero (the module is free on its
    /// generators).
    pub fn is_presented_free(&self) -> bool {
        self.presentation().matrix().is_zero()
    }

    pub fn reduce(&self, v: &[GradedPoly]) -> Vec<GradedPoly> {
        self.groebner().reduce(v)
    }

    pub fn is_zero_element(&self, v: &[GradedPoly]) -> bool {
        self.groebner().contains(v)
    }

    /// Standard terms of degree `d`; their classes are a basis of `M_d`.
    pub fn slice_basis(&self, d: i64) -> Vec<(usize, Monomial)> {
        self.groebner().standard_terms(d)
    }

    pub fn dim_in_degree(&self, d: i64) -> usize {
        self.slice_basis(d).len()
    }

    /// Coordinates of the class of a homogeneous vector against
    /// `basis = self.slice_basis(d)`.
    pub fn coordinates(&self, v: &[GradedPoly], basis: &[(usize, Monomial)]) -> Vec<Rational> {
        let nf = self.reduce(v);
        basis.iter().map(|(i, m)| nf[*i].coefficient(m)).collect()
    }

    /// `M[l]`: every generator and relation moves up by `l`.
    pub fn shift(&self, l: i64) -> FpModule {
        let p = self.presentation();
        FpModule::new(GradedHom {
            source: p.source().shift(l),
            target: p.target().shift(l),
            matrix: p.matrix().clone(),
        })
    }

    pub fn direct_sum(&self, other: &FpModule) -> FpModule {
        let (a, b) = (self.presentation(), other.presentation());
        let r = self.ring_rank();
        let top = a.matrix().hconcat(&PolyMatrix::zeros(r, a.target().rank(), b.source().rank()));
        let bottom = PolyMatrix::zeros(r, b.target().rank(), a.source().rank()).hconcat(b.matrix());
        FpModule::new(GradedHom {
            source: a.source().direct_sum(b.source()),
            target: a.target().direct_sum(b.target()),
            matrix: top.vconcat(&bottom),
        })
    }

    /// The submodule generated by `sub` modulo the one generated by `quot`,
    /// both given as vectors on the generators of `self` whose degrees are
    /// listed in the accompanying free modules. `quot` must lie in the span
    /// of `sub` and the relations for the result to be a subquotient.
    pub fn subquotient(
        &self,
        sub: &FreeModule,
        sub_vectors: &PolyMatrix,
        quot: &FreeModule,
        quot_vectors: &PolyMatrix,
    ) -> Result<FpModule, ModuleError> {
        let p = self.presentation();
        let all = sub_vectors.hconcat(quot_vectors).hconcat(p.matrix());
        let source = sub.direct_sum(quot).direct_sum(p.source());
        let big = GradedHom::new(source, self.generators().clone(), all)?;
        let syz = syzygies(&big)?;
        let k = sub.rank();
        let relations: Vec<Vec<GradedPoly>> = syz.matrix().columns().into_iter().map(|c| c[..k].to_vec()).collect();
        FpModule::from_relations(sub.clone(), &relations)
    }
}

impl fmt::Debug for FpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coker({:?})", self.presentation())
    }
}

/// A degree-preserving homomorphism between finitely presented modules,
/// given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct FpHom {
    source: FpModule,
    target: FpModule,
    matrix: PolyMatrix,
}

impl FpHom {
    /// Checks shape, degrees and that every source relation maps into the
    /// target relations.
    pub fn new(source: FpModule, target: FpModule, matrix: PolyMatrix) -> Result<Self, ModuleError> {
        if matrix.rows() != target.num_generators() || matrix.cols() != source.num_generators() {
            return Err(ModuleError::Shape(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.num_generators(),
                source.num_generators()
            )));
        }
        if source.ring_rank() != target.ring_rank() || matrix.ring_rank() != source.ring_rank() {
            return Err(ModuleError::RingRank {
                expected: source.ring_rank(),
                found: if target.ring_rank() != source.ring_rank() {
                    target.ring_rank()
                } else {
                    matrix.ring_rank()
                },
            });
        }
        check_degrees(source.generators(), target.generators(), &matrix)?;
        for (relation, rel) in source.relations().iter().enumerate() {
            if !target.is_zero_element(&matrix.apply(rel)) {
                return Err(ModuleError::IllDefinedHom { relation });
            }
        }
        Ok(FpHom { source, target, matrix })
    }

    pub(crate) fn new_unchecked(source: FpModule, target: FpModule, matrix: PolyMatrix) -> Self {
        FpHom { source, target, matrix }
    }

    pub fn identity(m: &FpModule) -> FpHom {
        FpHom {
            source: m.clone(),
            target: m.clone(),
            matrix: PolyMatrix::identity(m.ring_rank(), m.num_generators()),
        }
    }

    pub fn zero(source: &FpModule, target: &FpModule) -> FpHom {
        FpHom {
            source: source.clone(),
            target: target.clone(),
            matrix: PolyMatrix::zeros(source.ring_rank(), target.num_generators(), source.num_generators()),
        }
    }

    pub fn source(&self) -> &FpModule {
        &self.source
    }

    pub fn target(&self) -> &FpModule {
        &self.target
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    /// `after ∘ self`.
    pub fn compose(&self, after: &FpHom) -> Result<FpHom, ModuleError> {
        if self.target.generators() != after.source.generators() {
            return Err(ModuleError::Shape("maps are not composable".into()));
        }
        Ok(FpHom {
            source: self.source.clone(),
            target: after.target.clone(),
            matrix: after.matrix.mul(&self.matrix)?,
        })
    }

    /// Whether every generator maps to zero in the target.
    pub fn is_zero(&self) -> bool {
        self.matrix.columns().iter().all(|c| self.target.is_zero_element(c))
    }

    /// Generators of the kernel, as vectors on the source generators.
    pub fn kernel_vectors(&self) -> Result<(FreeModule, PolyMatrix), ModuleError> {
        let n = self.source.num_generators();
        let r = self.source.ring_rank();
        let tp = self.target.presentation();
        let big = GradedHom::new(
            self.source.generators().direct_sum(tp.source()),
            self.target.generators().clone(),
            self.matrix.hconcat(tp.matrix()),
        )?;
        let syz = syzygies(&big)?;
        let candidates: Vec<Vec<GradedPoly>> = syz
            .matrix()
            .columns()
            .into_iter()
            .map(|c| c[..n].to_vec())
            .filter(|c| !self.source.is_zero_element(c))
            .collect();
        let kept = minimal_generators(self.source.generators(), &candidates)?;
        let cols: Vec<Vec<GradedPoly>> = kept.iter().map(|&i| candidates[i].clone()).collect();
        let degrees = cols
            .iter()
            .map(|c| self.source.generators().vector_degree(c).unwrap())
            .collect();
        Ok((FreeModule::new(r, degrees), PolyMatrix::from_columns(r, n, &cols)))
    }

    /// The kernel with its inclusion into the source.
    pub fn kernel(&self) -> Result<(FpModule, FpHom), ModuleError> {
        let (free, vectors) = self.kernel_vectors()?;
        let r = self.source.ring_rank();
        let k = self
            .source
            .subquotient(&free, &vectors, &FreeModule::zero(r), &PolyMatrix::zeros(r, self.source.num_generators(), 0))?;
        let inclusion = FpHom {
            source: k.clone(),
            target: self.source.clone(),
            matrix: vectors,
        };
        Ok((k, inclusion))
    }

    pub fn image(&self) -> Result<FpModule, ModuleError> {
        let r = self.source.ring_rank();
        self.target.subquotient(
            self.source.generators(),
            &self.matrix,
            &FreeModule::zero(r),
            &PolyMatrix::zeros(r, self.target.num_generators(), 0),
        )
    }

    /// The cokernel with the projection from the target.
    pub fn cokernel(&self) -> Result<(FpModule, FpHom), ModuleError> {
        let tp = self.target.presentation();
        let c = FpModule::new(GradedHom::new(
            tp.source().direct_sum(self.source.generators()),
            self.target.generators().clone(),
            tp.matrix().hconcat(&self.matrix),
        )?);
        let projection = FpHom {
            source: self.target.clone(),
            target: c.clone(),
            matrix: PolyMatrix::identity(c.ring_rank(), c.num_generators()),
        };
        Ok((c, projection))
    }

    pub fn is_injective(&self) -> Result<bool, ModuleError> {
        Ok(self.kernel_vectors()?.0.rank() == 0)
    }

    pub fn is_surjective(&self) -> Result<bool, ModuleError> {
        Ok(self.cokernel()?.0.is_zero())
    }

    pub fn is_isomorphism(&self) -> Result<bool, ModuleError> {
        Ok(self.is_injective()? && self.is_surjective()?)
    }
}

/// `ker(outgoing) / im(incoming)` at `module`. A missing map stands for zero.
pub fn homology(module: &FpModule, incoming: Option<&FpHom>, outgoing: Option<&FpHom>) -> Result<FpModule, ModuleError> {
    let r = module.ring_rank();
    let n = module.num_generators();
    let (sub, sub_vectors) = match outgoing {
        Some(f) => f.kernel_vectors()?,
        None => (module.generators().clone(), PolyMatrix::identity(r, n)),
    };
    let (quot, quot_vectors) = match incoming {
        Some(f) => (f.source.generators().clone(), f.matrix.clone()),
        None => (FreeModule::zero(r), PolyMatrix::zeros(r, n, 0)),
    };
    module.subquotient(&sub, &sub_vectors, &quot, &quot_vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    fn p(s: &str, r: usize) -> GradedPoly {
        parse_poly(s, r).unwrap()
    }

    fn module(r: usize, gens: Vec<i64>, rels: &[&[&str]]) -> FpModule {
        let rels: Vec<Vec<GradedPoly>> = rels.iter().map(|v| v.iter().map(|s| p(s, r)).collect()).collect();
        FpModule::from_relations(FreeModule::new(r, gens), &rels).unwrap()
    }

    fn matrix(r: usize, cols: usize, rows: &[&[&str]]) -> PolyMatrix {
        let rows: Vec<Vec<GradedPoly>> = rows.iter().map(|v| v.iter().map(|s| p(s, r)).collect()).collect();
        PolyMatrix::from_rows(r, cols, &rows)
    }

    /// Dimensions in the even degrees of `range`.
    fn dims(m: &FpModule, range: std::ops::RangeInclusive<i64>) -> Vec<usize> {
        range.step_by(2).map(|d| m.dim_in_degree(d)).collect()
    }

    #[test]
    fn kernel_of_zero_map_is_the_source() {
        let m = module(1, vec![0], &[&["t1^2"]]);
        let n = FpModule::free(FreeModule::new(1, vec![0]));
        let (k, _) = FpHom::zero(&m, &n).kernel().unwrap();
        assert_eq!(dims(&k, -2..=6), dims(&m, -2..=6));
    }

    #[test]
    fn cokernel_of_multiplication() {
        let src = FpModule::free(FreeModule::new(1, vec![2]));
        let tgt = FpModule::free(FreeModule::new(1, vec![0]));
        let f = FpHom::new(src, tgt, matrix(1, 1, &[&["t1"]])).unwrap();
        let (c, _) = f.cokernel().unwrap();
        assert_eq!(dims(&c, -2..=4), vec![0, 1, 0, 0]);
        assert!(f.is_injective().unwrap());
        assert!(!f.is_surjective().unwrap());
    }

    #[test]
    fn kernel_of_sum_map() {
        let src = FpModule::free(FreeModule::new(1, vec![0, 0]));
        let tgt = FpModule::free(FreeModule::new(1, vec![0]));
        let f = FpHom::new(src, tgt, matrix(1, 2, &[&["1", "1"]])).unwrap();
        let (k, inc) = f.kernel().unwrap();
        assert_eq!(k.num_generators(), 1);
        assert!(k.is_presented_free() || k.groebner().is_empty());
        let col = inc.matrix().column(0);
        assert_eq!(&col[0] + &col[1], GradedPoly::zero(1));
        assert!(!col[0].is_zero());
    }

    #[test]
    fn ill_defined_maps_are_rejected() {
        // R/(t) -> R sending the generator to 1 does not respect t = 0
        let src = module(1, vec![0], &[&["t1"]]);
        let tgt = FpModule::free(FreeModule::new(1, vec![0]));
        let err = FpHom::new(src, tgt, matrix(1, 1, &[&["1"]])).unwrap_err();
        assert_eq!(err, ModuleError::IllDefinedHom { relation: 0 });
    }

    #[test]
    fn image_and_homology() {
        // R --t--> R --t--> R/(t^2) over r = 1
        let r0 = FpModule::free(FreeModule::new(1, vec![4]));
        let r1 = FpModule::free(FreeModule::new(1, vec![2]));
        let r2 = module(1, vec![0], &[&["t1^2"]]);
        let a = FpHom::new(r0, r1.clone(), matrix(1, 1, &[&["t1"]])).unwrap();
        let b = FpHom::new(r1.clone(), r2, matrix(1, 1, &[&["t1"]])).unwrap();
        assert_eq!(dims(&b.image().unwrap(), 0..=6), vec![0, 1, 0, 0]);
        // ker b = (t) R[2] = im a, so the middle homology vanishes
        let h = homology(&r1, Some(&a), Some(&b)).unwrap();
        assert!(h.is_zero());
    }

    #[test]
    fn direct_sum_and_shift() {
        let a = module(1, vec![0], &[&["t1"]]);
        let b = FpModule::free(FreeModule::new(1, vec![2]));
        let s = a.direct_sum(&b).shift(-2);
        assert_eq!(dims(&s, -4..=4), vec![0, 1, 1, 1, 1]);
    }
}
