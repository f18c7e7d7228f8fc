//! Homological invariants of finitely presented modules: Hilbert series,
//! Ext against `R`, dimension, depth, the Cohen–Macaulay property, syzygy
//! order, and degreewise local cohomology.

mod ext;
mod hilbert;
mod local_cohomology;

use std::fmt;

pub use ext::{ext_from_resolution, ext_table, ExtTable};
pub use hilbert::HilbertSeries;
pub use local_cohomology::{
    local_cohomology_window, required_exponent, verify_local_duality, DualityMismatch, DualityReport,
    LocalCohomologyTable,
};

use crate::module::{FpHom, FpModule, FreeModule, ModuleError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("the zero module has no depth")]
    ZeroModule,
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("saturation exponent {given} is too small; at least {required} is needed for this window")]
    ExponentTooSmall { given: u32, required: u32 },
    #[error("Čech dimensions changed between exponents {exponent} and {}", exponent + 1)]
    NotStabilized { exponent: u32 },
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// Krull dimension from the Hilbert series; `None` for the zero module.
pub fn dimension(m: &FpModule) -> Option<usize> {
    HilbertSeries::of(m).dimension()
}

/// Projective dimension: the length of the minimal resolution.
pub fn projective_dimension(m: &FpModule) -> usize {
    m.minimal_resolution().length()
}

/// `r - pd(M)`, checked against `r - max{p : Ext^p(M, R) != 0}`.
pub fn depth(m: &FpModule) -> Result<usize, InvariantError> {
    if m.is_zero() {
        return Err(InvariantError::ZeroModule);
    }
    let r = m.ring_rank();
    let pd = projective_dimension(m);
    let top = *ext_table(m)
        .nonzero()
        .last()
        .ok_or_else(|| InvariantError::Internal("nonzero module with vanishing Ext".into()))?;
    if pd != top {
        return Err(InvariantError::Internal(format!(
            "projective dimension {pd} but the last nonzero Ext is in position {top}"
        )));
    }
    Ok(r - pd)
}

/// Outcome of the Cohen–Macaulay test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmVerdict {
    pub cohen_macaulay: bool,
    pub dimension: Option<usize>,
    pub depth: Option<usize>,
    pub expected_dimension: Option<usize>,
}

impl CmVerdict {
    /// Cohen–Macaulay, and of the expected dimension when one was given.
    /// The zero module passes for every expected dimension.
    pub fn passes(&self) -> bool {
        self.cohen_macaulay
            && match (self.dimension, self.expected_dimension) {
                (Some(d), Some(e)) => d == e,
                _ => true,
            }
    }
}

/// Whether `M` is zero or has depth equal to its dimension. The answer is
/// computed a second way, as Ext being concentrated in position `r - dim`,
/// and the two must agree.
pub fn is_cohen_macaulay(m: &FpModule, expected_dim: Option<usize>) -> Result<CmVerdict, InvariantError> {
    let Some(dim) = dimension(m) else {
        return Ok(CmVerdict {
            cohen_macaulay: true,
            dimension: None,
            depth: None,
            expected_dimension: expected_dim,
        });
    };
    let depth = depth(m)?;
    let r = m.ring_rank();
    let by_depth = depth == dim;
    let by_ext = ext_table(m).nonzero() == vec![r - dim];
    if by_depth != by_ext {
        return Err(InvariantError::Internal(format!(
            "depth {depth} vs dimension {dim} disagrees with the Ext column test"
        )));
    }
    Ok(CmVerdict {
        cohen_macaulay: by_depth,
        dimension: Some(dim),
        depth: Some(depth),
        expected_dimension: expected_dim,
    })
}

/// How many times a module is a syzygy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SyzygyOrder {
    Finite(usize),
    /// Free modules are syzygies of every order.
    Infinite,
}

impl SyzygyOrder {
    pub fn at_least(self, j: usize) -> bool {
        match self {
            SyzygyOrder::Finite(k) => k >= j,
            SyzygyOrder::Infinite => true,
        }
    }
}

impl fmt::Display for SyzygyOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyzygyOrder::Finite(k) => write!(f, "{k}"),
            SyzygyOrder::Infinite => write!(f, "inf"),
        }
    }
}

/// The Auslander transpose: the cokernel of the dual of a minimal
/// presentation.
pub fn transpose(m: &FpModule) -> FpModule {
    FpModule::new(m.minimized().module.presentation().dual())
}

/// The largest `j <= r` with `Ext^i(Tr M, R) = 0` for `1 <= i <= j`, which
/// over a polynomial ring is the largest `j` such that `M` is a `j`-th
/// syzygy.
pub fn syzygy_order(m: &FpModule) -> SyzygyOrder {
    let min = &m.minimized().module;
    if min.is_presented_free() {
        return SyzygyOrder::Infinite;
    }
    let ext = ext_table(&transpose(m));
    let r = m.ring_rank();
    let j = (1..=r).take_while(|&i| ext.get(i).is_zero()).count();
    SyzygyOrder::Finite(j)
}

/// The map `M -> R^k` evaluating each generator of `Hom(M, R)`.
pub fn evaluation_map(m: &FpModule) -> Result<FpHom, ModuleError> {
    let r = m.ring_rank();
    let min = &m.minimized().module;
    let pres = min.presentation();
    let dual_target = FpModule::free(pres.target().dual());
    let dual_source = FpModule::free(pres.source().dual());
    let d = FpHom::new_unchecked(dual_target, dual_source, pres.matrix().transpose());
    let (functionals, vectors) = d.kernel_vectors()?;
    let target = FpModule::free(FreeModule::new(r, functionals.degrees().iter().map(|g| -g).collect()));
    let on_min = FpHom::new(min.clone(), target, vectors.transpose())?;
    let to_min = FpHom::new_unchecked(m.clone(), min.clone(), m.minimized().to_minimal.clone());
    to_min.compose(&on_min)
}

/// Torsion-freeness tested directly: the evaluation map into the dual of
/// `Hom(M, R)` is injective.
pub fn is_torsion_free(m: &FpModule) -> Result<bool, ModuleError> {
    if m.is_zero() {
        return Ok(true);
    }
    evaluation_map(m)?.is_injective()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_poly, GradedPoly};

    fn module(r: usize, gens: Vec<i64>, rels: &[&[&str]]) -> FpModule {
        let rels: Vec<Vec<GradedPoly>> = rels
            .iter()
            .map(|v| v.iter().map(|s| parse_poly(s, r).unwrap()).collect())
            .collect();
        FpModule::from_relations(FreeModule::new(r, gens), &rels).unwrap()
    }

    /// The ideal `(t1, t2)` presented by its Koszul relation.
    fn maximal_ideal() -> FpModule {
        module(2, vec![2, 2], &[&["t2", "-t1"]])
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&FpModule::free(FreeModule::new(3, vec![0]))), Some(3));
        assert_eq!(dimension(&module(2, vec![0], &[&["t1"], &["t2"]])), Some(0));
        assert_eq!(dimension(&module(2, vec![0], &[&["t1"]])), Some(1));
        assert_eq!(dimension(&FpModule::zero(2)), None);
    }

    #[test]
    fn depths() {
        assert_eq!(depth(&FpModule::free(FreeModule::new(2, vec![0, 4]))), Ok(2));
        assert_eq!(depth(&module(2, vec![0], &[&["t1"], &["t2"]])), Ok(0));
        assert_eq!(depth(&module(2, vec![0], &[&["t1"]])), Ok(1));
        assert_eq!(depth(&FpModule::zero(1)), Err(InvariantError::ZeroModule));
    }

    #[test]
    fn cohen_macaulay_examples() {
        let zero = is_cohen_macaulay(&FpModule::zero(2), Some(1)).unwrap();
        assert!(zero.passes());
        let trunc = is_cohen_macaulay(&module(1, vec![0], &[&["t1^2"]]), Some(0)).unwrap();
        assert!(trunc.passes());
        // R ⊕ Q over r = 1
        let mixed = module(1, vec![0, 0], &[&["0", "t1"]]);
        let v = is_cohen_macaulay(&mixed, None).unwrap();
        assert!(!v.cohen_macaulay);
        assert_eq!((v.depth, v.dimension), (Some(0), Some(1)));
        let wrong_dim = is_cohen_macaulay(&FpModule::free(FreeModule::new(1, vec![0])), Some(0)).unwrap();
        assert!(wrong_dim.cohen_macaulay && !wrong_dim.passes());
    }

    #[test]
    fn syzygy_orders() {
        assert_eq!(syzygy_order(&FpModule::free(FreeModule::new(2, vec![0]))), SyzygyOrder::Infinite);
        assert_eq!(syzygy_order(&FpModule::zero(2)), SyzygyOrder::Infinite);
        assert_eq!(syzygy_order(&module(1, vec![0], &[&["t1"]])), SyzygyOrder::Finite(0));
        assert_eq!(syzygy_order(&module(2, vec![0], &[&["t1"], &["t2"]])), SyzygyOrder::Finite(0));
        assert_eq!(syzygy_order(&maximal_ideal()), SyzygyOrder::Finite(1));
    }

    #[test]
    fn torsion_freeness_matches_first_syzygy() {
        let cases = [
            maximal_ideal(),
            module(1, vec![0], &[&["t1"]]),
            module(2, vec![0], &[&["t1"]]),
            module(1, vec![0, 0], &[&["0", "t1"]]),
            FpModule::free(FreeModule::new(2, vec![0, 2])),
        ];
        for m in &cases {
            assert_eq!(is_torsion_free(m).unwrap(), syzygy_order(m).at_least(1), "{m:?}");
        }
        // the ideal embeds in R: the evaluation map sends the generators to t1, t2
        let ev = evaluation_map(&maximal_ideal()).unwrap();
        assert_eq!(ev.target().num_generators(), 1);
    }
}
