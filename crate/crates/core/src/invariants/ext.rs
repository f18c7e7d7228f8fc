use crate::module::{homology, FpHom, FpModule, ModuleError, Resolution};

use super::HilbertSeries;

/// `Ext^p(M, R)` for `0 <= p <= r`, unshifted.
///
/// The shifted modules `Ext^p(M, R)[p]` are available through
/// [`ExtTable::shifted`].
#[derive(Clone, Debug)]
pub struct ExtTable {
    ring_rank: usize,
    entries: Vec<FpModule>,
}

impl ExtTable {
    pub fn ring_rank(&self) -> usize {
        self.ring_rank
    }

    pub fn entries(&self) -> &[FpModule] {
        &self.entries
    }

    pub fn get(&self, p: usize) -> &FpModule {
        &self.entries[p]
    }

    /// `Ext^p(M, R)[p]`.
    pub fn shifted(&self, p: usize) -> FpModule {
        self.entries[p].shift(p as i64)
    }

    /// Indices `p` with `Ext^p(M, R) != 0`.
    pub fn nonzero(&self) -> Vec<usize> {
        (0..self.entries.len()).filter(|&p| !self.entries[p].is_zero()).collect()
    }

    pub fn hilbert(&self) -> Vec<HilbertSeries> {
        self.entries.iter().map(HilbertSeries::of).collect()
    }
}

/// Cohomology of the dual of `res` at positions `0..=upto`. Dualizing sends
/// a generator of degree `d` to one of degree `-d` and each differential to
/// its transpose.
pub fn ext_from_resolution(res: &Resolution, upto: usize) -> Result<Vec<FpModule>, ModuleError> {
    let dual = |k: usize| FpModule::free(res.module(k).dual());
    let coboundary = |k: usize| {
        FpHom::new_unchecked(dual(k), dual(k + 1), res.map(k).matrix().transpose())
    };
    (0..=upto)
        .map(|p| {
            let incoming = (p > 0).then(|| coboundary(p - 1));
            let outgoing = coboundary(p);
            homology(&dual(p), incoming.as_ref(), Some(&outgoing))
        })
        .collect()
}

/// Ext against `R` from the minimal resolution, cached on the module.
pub fn ext_table(m: &FpModule) -> ExtTable {
    let r = m.ring_rank();
    let entries = m
        .ext_cache()
        .get_or_init(|| ext_from_resolution(m.minimal_resolution(), r).expect("dual complex of a valid resolution"))
        .clone();
    ExtTable { ring_rank: r, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{free_resolution, FreeModule};
    use crate::ring::{parse_poly, GradedPoly};

    fn module(r: usize, gens: Vec<i64>, rels: &[&[&str]]) -> FpModule {
        let rels: Vec<Vec<GradedPoly>> = rels
            .iter()
            .map(|v| v.iter().map(|s| parse_poly(s, r).unwrap()).collect())
            .collect();
        FpModule::from_relations(FreeModule::new(r, gens), &rels).unwrap()
    }

    fn support(m: &FpModule, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).filter(|&d| m.dim_in_degree(d) > 0).collect()
    }

    #[test]
    fn ext_of_free() {
        let t = ext_table(&FpModule::free(FreeModule::new(2, vec![0])));
        assert_eq!(t.nonzero(), vec![0]);
        assert_eq!(HilbertSeries::of(t.get(0)), HilbertSeries::new(2, [(0, 1)]));
    }

    #[test]
    fn ext_of_residue_field() {
        let k = module(2, vec![0], &[&["t1"], &["t2"]]);
        let t = ext_table(&k);
        assert_eq!(t.nonzero(), vec![2]);
        assert_eq!(support(t.get(2), -20, 20), vec![-4]);
        assert_eq!(t.get(2).dim_in_degree(-4), 1);
    }

    #[test]
    fn ext_of_truncated_line() {
        let m = module(1, vec![0], &[&["t1^2"]]);
        let t = ext_table(&m);
        assert_eq!(t.nonzero(), vec![1]);
        assert_eq!(support(t.get(1), -20, 20), vec![-4, -2]);
        assert_eq!(support(&t.shifted(1), -20, 20), vec![-3, -1]);
    }

    #[test]
    fn unminimized_resolution_gives_the_same_ext() {
        let m = module(2, vec![0, 2], &[&["t1", "1"], &["t1*t2", "t2"], &["t2^2", "0"]]);
        let a = ext_table(&m);
        let b = ext_from_resolution(&free_resolution(&m, 3), 2).unwrap();
        for p in 0..=2 {
            for d in -12..=4 {
                assert_eq!(a.get(p).dim_in_degree(d), b[p].dim_in_degree(d), "p={p} d={d}");
            }
        }
    }
}
