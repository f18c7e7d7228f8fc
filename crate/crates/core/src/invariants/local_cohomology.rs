use std::collections::HashMap;

use super::{ext_table, InvariantError};
use crate::module::linalg::{self, SparseRow};
use crate::module::FpModule;
use crate::ring::{GradedPoly, Monomial};

/// `dim_Q H^j_m(M)_d` for `0 <= j <= r` and `d` in a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCohomologyTable {
    ring_rank: usize,
    window: (i64, i64),
    exponent: u32,
    dims: Vec<Vec<usize>>,
}

impl LocalCohomologyTable {
    pub fn window(&self) -> (i64, i64) {
        self.window
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn ring_rank(&self) -> usize {
        self.ring_rank
    }

    /// Zero outside the window.
    pub fn get(&self, j: usize, d: i64) -> usize {
        let (lo, hi) = self.window;
        if j > self.ring_rank || d < lo || d > hi {
            return 0;
        }
        self.dims[j][(d - lo) as usize]
    }

    /// `(j, d, dim)` for every nonzero entry.
    pub fn nonzero(&self) -> Vec<(usize, i64, usize)> {
        let (lo, hi) = self.window;
        (0..=self.ring_rank)
            .flat_map(|j| (lo..=hi).map(move |d| (j, d)))
            .filter_map(|(j, d)| {
                let v = self.get(j, d);
                (v > 0).then_some((j, d, v))
            })
            .collect()
    }
}

/// Smallest exponent for which the truncated Čech complex computes local
/// cohomology in every degree `>= lowest`.
///
/// A free summand with generator in degree `a` has `H^r_m` spanned by the
/// fractions `1 / t^b` with `|b| = (a - d) / 2` and every `b_i >= 1`; all of
/// them are visible once `N >= max b_i`, and `max b_i <= |b| - r + 1`. The
/// bound over all generator degrees of the minimal resolution covers `M`.
pub fn required_exponent(m: &FpModule, lowest: i64) -> u32 {
    let r = m.ring_rank() as i64;
    let top = m
        .minimal_resolution()
        .modules()
        .iter()
        .flat_map(|f| f.degrees().iter().copied())
        .max();
    match top {
        None => 1,
        Some(a) => {
            let half = (a - lowest).max(0);
            let n = (half + 1) / 2 - r + 1;
            n.max(1) as u32
        }
    }
}

/// Degreewise local cohomology over the window `[lo, hi]`, computed from
/// the Čech complex on `t1..tr` with each localization truncated at
/// `t_i^exponent`: in degree `d` the `j`-th term is `⊕_{|S| = j}
/// M_{d + 2 j N}`, and the maps multiply by `± t_i^N`.
///
/// The exponent must reach [`required_exponent`]; the dimensions are also
/// recomputed at `N + 1` and must not change.
pub fn local_cohomology_window(
    m: &FpModule,
    window: (i64, i64),
    exponent: u32,
) -> Result<LocalCohomologyTable, InvariantError> {
    let required = required_exponent(m, window.0);
    if exponent < required {
        return Err(InvariantError::ExponentTooSmall {
            given: exponent,
            required,
        });
    }
    let dims = cech_dims(m, window, exponent);
    if dims != cech_dims(m, window, exponent + 1) {
        return Err(InvariantError::NotStabilized { exponent });
    }
    Ok(LocalCohomologyTable {
        ring_rank: m.ring_rank(),
        window,
        exponent,
        dims,
    })
}

struct Cech<'a> {
    m: &'a FpModule,
    r: usize,
    n: u32,
    bases: HashMap<i64, Vec<(usize, Monomial)>>,
    products: HashMap<(usize, i64), Vec<SparseRow>>,
}

impl Cech<'_> {
    fn basis(&mut self, e: i64) -> Vec<(usize, Monomial)> {
        let m = self.m;
        self.bases.entry(e).or_insert_with(|| m.slice_basis(e)).clone()
    }

    /// Coordinates of `t_i^N * b` for each basis element `b` of `M_e`.
    fn product(&mut self, i: usize, e: i64) -> Vec<SparseRow> {
        if let Some(rows) = self.products.get(&(i, e)) {
            return rows.clone();
        }
        let shift = Monomial::var(self.r, i).pow(self.n);
        let source = self.basis(e);
        let target = self.basis(e + 2 * self.n as i64);
        let gens = self.m.num_generators();
        let rows: Vec<SparseRow> = source
            .iter()
            .map(|(comp, mono)| {
                let mut v = vec![GradedPoly::zero(self.r); gens];
                v[*comp] = GradedPoly::monomial(self.r, mono.mul(&shift), num_traits::One::one());
                linalg::sparse_from_dense(&self.m.coordinates(&v, &target))
            })
            .collect();
        self.products.insert((i, e), rows.clone());
        rows
    }

    /// Rank of the `j`-th Čech differential in degree `d`.
    fn rank(&mut self, j: usize, d: i64, subsets: &[Vec<u32>]) -> usize {
        if j >= self.r {
            return 0;
        }
        let e = d + 2 * (self.n as i64) * j as i64;
        let target_dim = self.basis(e + 2 * self.n as i64).len();
        let position: HashMap<u32, usize> = subsets[j + 1].iter().enumerate().map(|(k, &s)| (s, k)).collect();
        let mut rows: Vec<SparseRow> = Vec::new();
        let source_dim = self.basis(e).len();
        for &s in &subsets[j] {
            let mut block: Vec<SparseRow> = vec![Vec::new(); source_dim];
            for i in 0..self.r {
                if s & (1 << i) != 0 {
                    continue;
                }
                let sign = if (s & ((1 << i) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                let offset = position[&(s | (1 << i))] * target_dim;
                for (k, row) in self.product(i, e).into_iter().enumerate() {
                    block[k].extend(row.into_iter().map(|(c, v)| (c + offset, if sign > 0 { v } else { -v })));
                }
            }
            for mut row in block {
                row.sort_by_key(|(c, _)| *c);
                rows.push(row);
            }
        }
        linalg::rank(rows)
    }
}

fn cech_dims(m: &FpModule, window: (i64, i64), n: u32) -> Vec<Vec<usize>> {
    let r = m.ring_rank();
    let (lo, hi) = window;
    let mut subsets: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
    for s in 0u32..(1 << r) {
        subsets[s.count_ones() as usize].push(s);
    }
    let mut cech = Cech {
        m,
        r,
        n,
        bases: HashMap::new(),
        products: HashMap::new(),
    };
    let mut dims = vec![Vec::new(); r + 1];
    for d in lo..=hi {
        let ranks: Vec<usize> = (0..=r).map(|j| cech.rank(j, d, &subsets)).collect();
        for j in 0..=r {
            let e = d + 2 * (n as i64) * j as i64;
            let size = subsets[j].len() * cech.basis(e).len();
            let incoming = if j > 0 { ranks[j - 1] } else { 0 };
            dims[j].push(size - ranks[j] - incoming);
        }
    }
    dims
}

/// One failed comparison `dim H^j_m(M)_d` vs `dim Ext^{r-j}(M, R)_{-d-2r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityMismatch {
    pub j: usize,
    pub degree: i64,
    pub local_cohomology: usize,
    pub ext: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub window: (i64, i64),
    pub exponent: u32,
    pub checked: usize,
    pub mismatches: Vec<DualityMismatch>,
}

impl DualityReport {
    pub fn passes(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares local cohomology with Ext against `R[2r]`, degree by degree.
pub fn verify_local_duality(m: &FpModule, window: (i64, i64), exponent: u32) -> Result<DualityReport, InvariantError> {
    let table = local_cohomology_window(m, window, exponent)?;
    let ext = ext_table(m);
    let r = m.ring_rank();
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for j in 0..=r {
        for d in window.0..=window.1 {
            let lc = table.get(j, d);
            let e = ext.get(r - j).dim_in_degree(-d - 2 * r as i64);
            checked += 1;
            if lc != e {
                mismatches.push(DualityMismatch {
                    j,
                    degree: d,
                    local_cohomology: lc,
                    ext: e,
                });
            }
        }
    }
    Ok(DualityReport {
        window,
        exponent,
        checked,
        mismatches,
    })
}
