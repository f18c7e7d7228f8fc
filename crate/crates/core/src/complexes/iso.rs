use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::invariants::{depth, ext_table, HilbertSeries};
use crate::module::linalg;
use crate::module::{combine, hom_space_in_degree_zero, FpHom, FpModule, ModuleError};
use crate::ring::Rational;

pub const DEFAULT_SEED: u64 = 0x5eed;

const MAX_SUPPORT: usize = 4;
const RANDOM_DRAWS: usize = 200;
const COEFF_BOUND: i64 = 9;

/// The invariant that separates two modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonIsoReason {
    HilbertSeries { left: HilbertSeries, right: HilbertSeries },
    Dimension { left: Option<usize>, right: Option<usize> },
    Depth { left: usize, right: usize },
    ExtHilbertSeries { p: usize, left: HilbertSeries, right: HilbertSeries },
    /// No nonzero degree-0 map exists although both modules are nonzero.
    NoMaps,
}

impl fmt::Display for NonIsoReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonIsoReason::HilbertSeries { left, right } => write!(f, "Hilbert series {left} vs {right}"),
            NonIsoReason::Dimension { left, right } => write!(f, "dimension {left:?} vs {right:?}"),
            NonIsoReason::Depth { left, right } => write!(f, "depth {left} vs {right}"),
            NonIsoReason::ExtHilbertSeries { p, left, right } => {
                write!(f, "Ext^{p} Hilbert series {left} vs {right}")
            }
            NonIsoReason::NoMaps => write!(f, "no nonzero degree-0 homomorphism"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum IsoVerdict {
    /// The witness has been checked to have zero kernel and cokernel.
    Iso { witness: FpHom },
    NonIso { reason: NonIsoReason },
    /// The search budget ran out; `tried` candidates were examined.
    Unknown { tried: usize },
}

impl IsoVerdict {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoVerdict::Iso { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            IsoVerdict::Iso { .. } => "certified-iso",
            IsoVerdict::NonIso { .. } => "certified-noniso",
            IsoVerdict::Unknown { .. } => "unknown",
        }
    }
}

pub fn iso_probe(m: &FpModule, n: &FpModule) -> Result<IsoVerdict, ModuleError> {
    iso_probe_with_seed(m, n, DEFAULT_SEED)
}

/// Decides `M ≅ N` when it can.
///
/// Invariants are compared first. Then degree-0 maps between the minimal
/// presentations are searched: sparse `±1` combinations of a basis of
/// `Hom_0`, then seeded random combinations. With minimal presentations and
/// equal Hilbert series, a map is an isomorphism exactly when its constant
/// part has full row rank, so candidates are screened that way before the
/// survivor is certified through Gröbner kernel and cokernel computations.
pub fn iso_probe_with_seed(m: &FpModule, n: &FpModule, seed: u64) -> Result<IsoVerdict, ModuleError> {
    if let Some(reason) = distinguishing_invariant(m, n) {
        return Ok(IsoVerdict::NonIso { reason });
    }
    let (mm, nm) = (m.minimized(), n.minimized());
    if mm.module.num_generators() == 0 && nm.module.num_generators() == 0 {
        let witness = FpHom::zero(m, n);
        return Ok(IsoVerdict::Iso { witness });
    }
    let basis = hom_space_in_degree_zero(&mm.module, &nm.module);
    if basis.is_empty() {
        return Ok(IsoVerdict::NonIso {
            reason: NonIsoReason::NoMaps,
        });
    }
    let constants: Vec<Vec<Vec<Rational>>> = basis.iter().map(|h| h.matrix().constant_part()).collect();
    let rows = nm.module.num_generators();
    let full_rank = |coeffs: &[Rational]| {
        let mut acc = vec![vec![Rational::zero(); mm.module.num_generators()]; rows];
        for (c, k) in coeffs.iter().zip(&constants) {
            if c.is_zero() {
                continue;
            }
            for (i, row) in k.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    acc[i][j] += c * v;
                }
            }
        }
        linalg::rank(acc.iter().map(|r| linalg::sparse_from_dense(r))) == rows
    };
    let certify = |coeffs: &[Rational]| -> Result<Option<FpHom>, ModuleError> {
        let phi = combine(&basis, coeffs);
        let to = FpHom::new_unchecked(m.clone(), mm.module.clone(), mm.to_minimal.clone());
        let from = FpHom::new_unchecked(nm.module.clone(), n.clone(), nm.from_minimal.clone());
        let witness = to.compose(&phi)?.compose(&from)?;
        Ok(witness.is_isomorphism()?.then_some(witness))
    };

    let mut tried = 0;
    for coeffs in sparse_sign_patterns(basis.len()) {
        tried += 1;
        if full_rank(&coeffs) {
            if let Some(witness) = certify(&coeffs)? {
                return Ok(IsoVerdict::Iso { witness });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_DRAWS {
        tried += 1;
        let coeffs: Vec<Rational> = (0..basis.len())
            .map(|_| Rational::from_integer(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND).into()))
            .collect();
        if full_rank(&coeffs) {
            if let Some(witness) = certify(&coeffs)? {
                return Ok(IsoVerdict::Iso { witness });
            }
        }
    }
    Ok(IsoVerdict::Unknown { tried })
}

fn distinguishing_invariant(m: &FpModule, n: &FpModule) -> Option<NonIsoReason> {
    let (hm, hn) = (HilbertSeries::of(m), HilbertSeries::of(n));
    if hm != hn {
        return Some(NonIsoReason::HilbertSeries { left: hm, right: hn });
    }
    let (dm, dn) = (hm.dimension(), hn.dimension());
    if dm != dn {
        return Some(NonIsoReason::Dimension { left: dm, right: dn });
    }
    if dm.is_none() {
        return None;
    }
    if let (Ok(a), Ok(b)) = (depth(m), depth(n)) {
        if a != b {
            return Some(NonIsoReason::Depth { left: a, right: b });
        }
    }
    let (em, en) = (ext_table(m).hilbert(), ext_table(n).hilbert());
    for (p, (a, b)) in em.into_iter().zip(en).enumerate() {
        if a != b {
            return Some(NonIsoReason::ExtHilbertSeries { p, left: a, right: b });
        }
    }
    None
}

/// Coefficient vectors with at most four nonzero entries, each `±1`,
/// by increasing support size.
fn sparse_sign_patterns(n: usize) -> impl Iterator<Item = Vec<Rational>> {
    let mut out = Vec::new();
    for size in 1..=MAX_SUPPORT.min(n) {
        for support in subsets(n, size) {
            for signs in 0u32..(1 << size) {
                let mut v = vec![Rational::zero(); n];
                for (k, &i) in support.iter().enumerate() {
                    let s = if signs & (1 << k) == 0 { 1 } else { -1 };
                    v[i] = Rational::from_integer(s.into());
                }
                out.push(v);
            }
        }
    }
    out.into_iter()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
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
    fn identical_modules() {
        let m = cyclic(1, "t1^2");
        assert!(iso_probe(&m, &m).unwrap().is_iso());
    }

    #[test]
    fn hilbert_series_separates() {
        match iso_probe(&cyclic(1, "t1"), &cyclic(1, "t1^2")).unwrap() {
            IsoVerdict::NonIso {
                reason: NonIsoReason::HilbertSeries { .. },
            } => {}
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn different_presentations_of_one_module() {
        // R/(t1) presented with a redundant generator and a change of basis
        let a = cyclic(2, "t1");
        let rels: Vec<Vec<_>> = [["t1", "0"], ["1", "-1"]]
            .iter()
            .map(|v| v.iter().map(|s| parse_poly(s, 2).unwrap()).collect())
            .collect();
        let b = FpModule::from_relations(FreeModule::new(2, vec![0, 0]), &rels).unwrap();
        let v = iso_probe(&a, &b).unwrap();
        let IsoVerdict::Iso { witness } = v else { panic!("{v:?}") };
        assert!(witness.is_isomorphism().unwrap());
    }

    #[test]
    fn same_hilbert_series_different_modules() {
        // R/(t1) and R/(t2) over r = 2: isomorphic only up to a ring automorphism
        let v = iso_probe(&cyclic(2, "t1"), &cyclic(2, "t2")).unwrap();
        assert!(!v.is_iso());
        assert_eq!(v.label(), "certified-noniso");
    }
}
