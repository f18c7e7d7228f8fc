use super::syzygy::{kernel_generators, syzygies};
use super::{FpModule, FreeModule, GradedHom, PolyMatrix};

/// A free resolution `... -> F2 -> F1 -> F0 -> M`.
///
/// `maps[k]` is the differential `F_{k+1} -> F_k`.
#[derive(Clone, Debug)]
pub struct Resolution {
    modules: Vec<FreeModule>,
    maps: Vec<GradedHom>,
    augmentation: PolyMatrix,
    minimal: bool,
}

impl Resolution {
    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    pub fn module(&self, k: usize) -> FreeModule {
        self.modules
            .get(k)
            .cloned()
            .unwrap_or_else(|| FreeModule::zero(self.modules[0].ring_rank()))
    }

    pub fn maps(&self) -> &[GradedHom] {
        &self.maps
    }

    /// The differential `F_{k+1} -> F_k`, zero past the end.
    pub fn map(&self, k: usize) -> GradedHom {
        self.maps.get(k).cloned().unwrap_or_else(|| {
            let (s, t) = (self.module(k + 1), self.module(k));
            let m = PolyMatrix::zeros(t.ring_rank(), t.rank(), s.rank());
            GradedHom::new(s, t, m).unwrap()
        })
    }

    /// Images of the `F0` generators in the generators of the resolved module.
    pub fn augmentation(&self) -> &PolyMatrix {
        &self.augmentation
    }

    /// Index of the last nonzero free module (0 for the zero module).
    pub fn length(&self) -> usize {
        self.modules.iter().rposition(|f| f.rank() > 0).unwrap_or(0)
    }

    pub fn betti(&self) -> Vec<usize> {
        self.modules[..=self.length()].iter().map(FreeModule::rank).collect()
    }

    pub fn is_flagged_minimal(&self) -> bool {
        self.minimal
    }

    /// Whether every differential has all entries in the maximal ideal.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(GradedHom::is_minimal)
    }

    pub fn composites_vanish(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[1].compose(&w[0]).map(|c| c.matrix().is_zero()).unwrap_or(false))
    }
}

/// The minimal free resolution, built from a minimized presentation by
/// iterated minimal syzygies. Over `r` variables it has length at most `r`.
pub fn minimal_resolution(m: &FpModule) -> Resolution {
    let min = m.minimized();
    let pres = min.module.presentation().clone();
    let mut modules = vec![pres.target().clone()];
    let mut maps = Vec::new();
    let mut current = pres;
    while current.source().rank() > 0 {
        modules.push(current.source().clone());
        let next = syzygies(&current).expect("syzygies of a valid map");
        maps.push(current);
        current = next;
    }
    Resolution {
        modules,
        maps,
        augmentation: min.from_minimal.clone(),
        minimal: true,
    }
}

/// A free resolution of the given presentation, unminimized, carried to
/// `F_{max_length}`. Each kernel is generated by the raw elimination output,
/// so the result is in general far from minimal.
pub fn free_resolution(m: &FpModule, max_length: usize) -> Resolution {
    let r = m.ring_rank();
    let pres = m.presentation().clone();
    let mut modules = vec![pres.target().clone()];
    let mut maps = Vec::new();
    let mut current = pres;
    while modules.len() <= max_length {
        modules.push(current.source().clone());
        let next = kernel_generators(&current).expect("kernel of a valid map");
        maps.push(current);
        current = next;
    }
    Resolution {
        modules,
        maps,
        augmentation: PolyMatrix::identity(r, m.num_generators()),
        minimal: false,
    }
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

    #[test]
    fn koszul_betti_numbers() {
        let k = module(2, vec![0], &[&["t1"], &["t2"]]);
        let res = k.minimal_resolution();
        assert_eq!(res.betti(), vec![1, 2, 1]);
        assert_eq!(res.module(0).degrees(), &[0]);
        assert_eq!(res.module(1).degrees(), &[2, 2]);
        assert_eq!(res.module(2).degrees(), &[4]);
        assert!(res.is_minimal());
        assert!(res.composites_vanish());
    }

    #[test]
    fn free_module_has_length_zero() {
        let f = FpModule::free(FreeModule::new(3, vec![0, 2]));
        assert_eq!(f.minimal_resolution().length(), 0);
        assert_eq!(f.minimal_resolution().betti(), vec![2]);
    }

    #[test]
    fn cyclic_hypersurface() {
        let m = module(1, vec![0], &[&["t1^2"]]);
        let res = m.minimal_resolution();
        assert_eq!(res.betti(), vec![1, 1]);
        assert_eq!(res.module(1).degrees(), &[4]);
    }

    #[test]
    fn unminimized_resolution_is_a_complex() {
        let m = module(2, vec![0, 2], &[&["t1", "1"], &["t1*t2", "t2"], &["t2^2", "0"]]);
        let res = free_resolution(&m, 3);
        assert!(res.composites_vanish());
        assert!(!res.is_flagged_minimal());
    }
}
