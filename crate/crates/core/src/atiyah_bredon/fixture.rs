//! Fixture bundles: one JSON document per space.

use serde::{Deserialize, Serialize};

use super::{
    build_ab_complex, verify_duality_shift, verify_duflot, verify_ext_identity, verify_ext_vanishing,
    verify_localization_torsion, verify_locally_free_shift, verify_stratum_cm, verify_syzygy_equivalence_all, AbError,
    HomologySource, OrbitFiltrationData, PdMetadata, SesFixture, SyzygyEquivalenceRow, TorsionVerdict,
    DEFAULT_TORSION_POWER,
};
use crate::gkm::{with_higher_strata, MomentGraph};
use crate::invariants::{HilbertSeries, SyzygyOrder};
use crate::io::{parse_hom, parse_matrix, MatrixJson, ModuleJson, MomentGraphJson};
use crate::module::{FpHom, FpModule};
use crate::ring::{parse_poly, GradedPoly};

pub const BUNDLE_SCHEMA: &str = "eqhom.fixture/1";

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BundleJson {
    schema: String,
    name: String,
    #[serde(default)]
    description: String,
    ring_rank: usize,
    #[serde(default)]
    filtration: Option<FiltrationJson>,
    #[serde(default)]
    gkm: Option<GkmJson>,
    #[serde(default)]
    homology: Option<ModuleJson>,
    #[serde(default)]
    pd: Option<PdMetadata>,
    #[serde(default)]
    ses: Vec<SesJson>,
    #[serde(default)]
    restrictions: Vec<RestrictionJson>,
    #[serde(default)]
    locally_free: Vec<LocallyFreeJson>,
    #[serde(default)]
    segments: Vec<SegmentJson>,
    #[serde(default)]
    duality_pairs: Vec<DualityPairJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FiltrationJson {
    strata: Vec<ModuleJson>,
    differentials: Vec<MatrixJson>,
    total: ModuleJson,
    augmentation: MatrixJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GkmJson {
    graph: MomentGraphJson,
    #[serde(default)]
    higher_strata: Vec<ModuleJson>,
    #[serde(default)]
    higher_differentials: Vec<MatrixJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SesJson {
    tag: String,
    a: ModuleJson,
    b: ModuleJson,
    c: ModuleJson,
    f: MatrixJson,
    g: MatrixJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RestrictionJson {
    name: String,
    source: ModuleJson,
    target: ModuleJson,
    matrix: MatrixJson,
    elements: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LocallyFreeJson {
    name: String,
    quotient: ModuleJson,
    total: ModuleJson,
    p: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SegmentJson {
    name: String,
    module: ModuleJson,
    i: i64,
    j: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DualityPairJson {
    name: String,
    cohomology: ModuleJson,
    homology: ModuleJson,
    n: i64,
}

/// Reads a standalone short exact sequence `{"tag", "a", "b", "c", "f", "g"}`.
pub fn load_ses(text: &str) -> Result<SesFixture, AbError> {
    let s: SesJson = serde_json::from_str(text).map_err(crate::io::IoError::from)?;
    let r = s.a.ring_rank;
    let (a, m, c) = (module_over(&s.a, r, &s.tag)?, module_over(&s.b, r, &s.tag)?, module_over(&s.c, r, &s.tag)?);
    SesFixture::new(s.tag.clone(), parse_hom(&a, &m, &s.f)?, parse_hom(&m, &c, &s.g)?)
}

#[derive(Clone, Debug)]
pub struct RestrictionFixture {
    pub name: String,
    pub map: FpHom,
    pub elements: Vec<GradedPoly>,
}

#[derive(Clone, Debug)]
pub struct LocallyFreeFixture {
    pub name: String,
    pub quotient: FpModule,
    pub total: FpModule,
    pub p: usize,
}

/// A module whose Ext should vanish outside `(i, j]`.
#[derive(Clone, Debug)]
pub struct SegmentFixture {
    pub name: String,
    pub module: FpModule,
    pub i: i64,
    pub j: i64,
}

#[derive(Clone, Debug)]
pub struct DualityPair {
    pub name: String,
    pub cohomology: FpModule,
    pub homology: FpModule,
    pub n: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BundleStatus {
    Accepted,
    /// Strata at these levels are not zero or Cohen–Macaulay of the right
    /// dimension, so the data cannot come from a space.
    Quarantined { failing_strata: Vec<usize> },
}

#[derive(Clone, Debug)]
pub struct FixtureBundle {
    pub name: String,
    pub description: String,
    pub data: OrbitFiltrationData,
    pub ses: Vec<SesFixture>,
    pub restrictions: Vec<RestrictionFixture>,
    pub locally_free: Vec<LocallyFreeFixture>,
    pub segments: Vec<SegmentFixture>,
    pub duality_pairs: Vec<DualityPair>,
    pub status: BundleStatus,
}

fn module_over(j: &ModuleJson, r: usize, what: &str) -> Result<FpModule, AbError> {
    if j.ring_rank != r {
        return Err(AbError::Shape(format!("{what}: ring rank {} differs from the bundle's {r}", j.ring_rank)));
    }
    Ok(j.to_module()?)
}

/// Parses and validates a bundle, then tests its strata and quarantines it
/// if any fails.
pub fn load_bundle(text: &str) -> Result<FixtureBundle, AbError> {
    let b: BundleJson = serde_json::from_str(text).map_err(crate::io::IoError::from)?;
    if b.schema != BUNDLE_SCHEMA {
        return Err(AbError::Shape(format!("schema {:?}, expected {BUNDLE_SCHEMA:?}", b.schema)));
    }
    let r = b.ring_rank;
    let data = match (&b.filtration, &b.gkm) {
        (Some(f), None) => {
            let strata = f
                .strata
                .iter()
                .enumerate()
                .map(|(i, m)| module_over(m, r, &format!("stratum {i}")))
                .collect::<Result<Vec<_>, _>>()?;
            if strata.len() != r + 1 || f.differentials.len() != r {
                return Err(AbError::Shape(format!(
                    "{} strata and {} differentials for ring rank {r}",
                    strata.len(),
                    f.differentials.len()
                )));
            }
            let differentials = f
                .differentials
                .iter()
                .enumerate()
                .map(|(i, m)| parse_hom(&strata[i], &strata[i + 1], m))
                .collect::<Result<Vec<_>, _>>()?;
            let total = module_over(&f.total, r, "total")?;
            let augmentation = parse_hom(&total, &strata[0], &f.augmentation)?;
            OrbitFiltrationData::new(strata, differentials, total, augmentation)?
        }
        (None, Some(g)) => {
            if g.graph.rank != r {
                return Err(AbError::Shape("moment graph rank differs from the bundle's".into()));
            }
            let graph = MomentGraph::from_json(&g.graph).map_err(|e| AbError::Gkm(e.to_string()))?;
            let strata = g
                .higher_strata
                .iter()
                .enumerate()
                .map(|(k, m)| module_over(m, r, &format!("stratum {}", k + 2)))
                .collect::<Result<Vec<_>, _>>()?;
            with_higher_strata(&graph, strata, &g.higher_differentials).map_err(|e| match e {
                crate::gkm::GkmError::Filtration(ab) => ab,
                other => AbError::Gkm(other.to_string()),
            })?
        }
        _ => return Err(AbError::Shape("a bundle needs exactly one of \"filtration\" and \"gkm\"".into())),
    };
    let mut data = data;
    if let Some(h) = &b.homology {
        data = data.with_homology(module_over(h, r, "homology")?)?;
    }
    if let Some(pd) = b.pd {
        data = data.with_pd(pd);
    }
    let ses = b
        .ses
        .iter()
        .map(|s| {
            let (a, m, c) = (module_over(&s.a, r, &s.tag)?, module_over(&s.b, r, &s.tag)?, module_over(&s.c, r, &s.tag)?);
            SesFixture::new(s.tag.clone(), parse_hom(&a, &m, &s.f)?, parse_hom(&m, &c, &s.g)?)
        })
        .collect::<Result<Vec<_>, AbError>>()?;
    let restrictions = b
        .restrictions
        .iter()
        .map(|x| {
            let (s, t) = (module_over(&x.source, r, &x.name)?, module_over(&x.target, r, &x.name)?);
            let m = parse_matrix(&x.matrix, r, t.num_generators(), s.num_generators())?;
            let elements = x
                .elements
                .iter()
                .map(|e| parse_poly(e, r).map_err(|e| AbError::Module(e.into())))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(RestrictionFixture {
                name: x.name.clone(),
                map: FpHom::new(s, t, m)?,
                elements,
            })
        })
        .collect::<Result<Vec<_>, AbError>>()?;
    let locally_free = b
        .locally_free
        .iter()
        .map(|x| {
            if x.p > r {
                return Err(AbError::Shape(format!("{}: p = {} exceeds the rank", x.name, x.p)));
            }
            Ok(LocallyFreeFixture {
                name: x.name.clone(),
                quotient: module_over(&x.quotient, r - x.p, &x.name)?,
                total: module_over(&x.total, r, &x.name)?,
                p: x.p,
            })
        })
        .collect::<Result<Vec<_>, AbError>>()?;
    let segments = b
        .segments
        .iter()
        .map(|x| {
            Ok(SegmentFixture {
                name: x.name.clone(),
                module: module_over(&x.module, r, &x.name)?,
                i: x.i,
                j: x.j,
            })
        })
        .collect::<Result<Vec<_>, AbError>>()?;
    let duality_pairs = b
        .duality_pairs
        .iter()
        .map(|x| {
            Ok(DualityPair {
                name: x.name.clone(),
                cohomology: module_over(&x.cohomology, r, &x.name)?,
                homology: module_over(&x.homology, r, &x.name)?,
                n: x.n,
            })
        })
        .collect::<Result<Vec<_>, AbError>>()?;
    let failing_strata: Vec<usize> = verify_stratum_cm(&data)?
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.passes())
        .map(|(i, _)| i)
        .collect();
    let status = if failing_strata.is_empty() {
        BundleStatus::Accepted
    } else {
        BundleStatus::Quarantined { failing_strata }
    };
    Ok(FixtureBundle {
        name: b.name,
        description: b.description,
        data,
        ses,
        restrictions,
        locally_free,
        segments,
        duality_pairs,
        status,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtIdentityRowReport {
    pub i: usize,
    pub cohomology_hilbert: String,
    pub ext_hilbert: String,
    pub unshifted: String,
    pub shifted: String,
    pub matched: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumReport {
    pub i: usize,
    pub hilbert: String,
    pub dimension: Option<usize>,
    pub depth: Option<usize>,
    pub expected_dimension: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SesReport {
    pub tag: String,
    pub failures: Vec<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionReport {
    pub name: String,
    pub verdict: TorsionVerdict,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocallyFreeReport {
    pub name: String,
    pub p: usize,
    pub verdict: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentReport {
    pub name: String,
    pub i: i64,
    pub j: i64,
    pub nonzero_ext: Vec<usize>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityPairReport {
    pub name: String,
    pub n: i64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyReport {
    pub exact_through: i64,
    pub syzygy_order: String,
    pub rows: Vec<SyzygyEquivalenceRow>,
    pub pass: bool,
}

/// Every check on one bundle. `pass` is the conjunction of the parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleReport {
    pub name: String,
    pub ring_rank: usize,
    pub status: BundleStatus,
    pub truncated: bool,
    pub complex_exact_positions: Vec<i64>,
    pub homology_source: Option<HomologySource>,
    pub ext_identity: Vec<ExtIdentityRowReport>,
    pub strata: Vec<StratumReport>,
    pub syzygy: SyzygyReport,
    /// Hilbert series of `H_T^*(X)` against the supplied homology moved by
    /// `n`; absent without orientable duality data and a supplied module.
    pub poincare_duality: Option<bool>,
    pub ses: Vec<SesReport>,
    pub restrictions: Vec<RestrictionReport>,
    pub locally_free: Vec<LocallyFreeReport>,
    pub segments: Vec<SegmentReport>,
    pub duality_pairs: Vec<DualityPairReport>,
    pub pass: bool,
}

/// Runs every check that applies to `bundle`.
pub fn verify_bundle(bundle: &FixtureBundle, seed: u64) -> Result<BundleReport, AbError> {
    let data = &bundle.data;
    let r = data.ring_rank();
    let complex_exact_positions = build_ab_complex(data, true)?.exactness()?.exact_positions();
    let (homology_source, ext_identity) = match verify_ext_identity(data, seed) {
        Ok(rep) => (
            Some(rep.homology_source),
            rep.rows
                .iter()
                .map(|row| ExtIdentityRowReport {
                    i: row.i,
                    cohomology_hilbert: HilbertSeries::of(&row.cohomology).to_string(),
                    ext_hilbert: HilbertSeries::of(&row.ext).to_string(),
                    unshifted: row.unshifted.label().into(),
                    shifted: row.shifted.label().into(),
                    matched: row.matched().into(),
                    pass: row.passes(),
                })
                .collect(),
        ),
        Err(AbError::MissingHomology) => (None, Vec::new()),
        Err(e) => return Err(e),
    };
    let strata = verify_stratum_cm(data)?
        .into_iter()
        .enumerate()
        .map(|(i, v)| StratumReport {
            i,
            hilbert: HilbertSeries::of(data.stratum(i)).to_string(),
            dimension: v.dimension,
            depth: v.depth,
            expected_dimension: r - i,
            pass: v.passes(),
        })
        .collect::<Vec<_>>();
    let syz = verify_syzygy_equivalence_all(data)?;
    let syzygy = SyzygyReport {
        exact_through: syz.exact_through,
        syzygy_order: match syz.syzygy_order {
            SyzygyOrder::Infinite => "inf".into(),
            SyzygyOrder::Finite(k) => k.to_string(),
        },
        pass: syz.passes(),
        rows: syz.rows,
    };
    let poincare_duality = match (data.pd(), data.supplied_homology()) {
        (Some(pd), Some(h)) if pd.orientable => Some(verify_duality_shift(data.total(), h, pd.n)),
        _ => None,
    };
    let ses = bundle
        .ses
        .iter()
        .map(|s| {
            let v = verify_duflot(s)?;
            Ok(SesReport {
                tag: v.tag.clone(),
                failures: v.ses.failures().into_iter().map(String::from).collect(),
                pass: v.passes(),
            })
        })
        .collect::<Result<Vec<_>, AbError>>()?;
    let restrictions = bundle
        .restrictions
        .iter()
        .map(|x| {
            let verdict = verify_localization_torsion(&x.map, &x.elements, DEFAULT_TORSION_POWER)?;
            Ok(RestrictionReport {
                name: x.name.clone(),
                pass: verdict.passes(),
                verdict,
            })
        })
        .collect::<Result<Vec<_>, AbError>>()?;
    let locally_free = bundle
        .locally_free
        .iter()
        .map(|x| {
            let v = verify_locally_free_shift(&x.quotient, &x.total, x.p, seed)?;
            Ok(LocallyFreeReport {
                name: x.name.clone(),
                p: x.p,
                verdict: v.label().into(),
                pass: v.passes(),
            })
        })
        .collect::<Result<Vec<_>, AbError>>()?;
    let segments = bundle
        .segments
        .iter()
        .map(|x| {
            let (nonzero_ext, pass) = verify_ext_vanishing(&x.module, x.i, x.j);
            SegmentReport {
                name: x.name.clone(),
                i: x.i,
                j: x.j,
                nonzero_ext,
                pass,
            }
        })
        .collect::<Vec<_>>();
    let duality_pairs = bundle
        .duality_pairs
        .iter()
        .map(|x| DualityPairReport {
            name: x.name.clone(),
            n: x.n,
            pass: verify_duality_shift(&x.cohomology, &x.homology, x.n),
        })
        .collect::<Vec<_>>();
    let pass = bundle.status == BundleStatus::Accepted
        && ext_identity.iter().all(|x| x.pass)
        && strata.iter().all(|x| x.pass)
        && syzygy.pass
        && poincare_duality != Some(false)
        && ses.iter().all(|x| x.pass)
        && restrictions.iter().all(|x| x.pass)
        && locally_free.iter().all(|x| x.pass)
        && segments.iter().all(|x| x.pass)
        && duality_pairs.iter().all(|x| x.pass);
    Ok(BundleReport {
        name: bundle.name.clone(),
        ring_rank: r,
        status: bundle.status.clone(),
        truncated: data.is_truncated(),
        complex_exact_positions,
        homology_source,
        ext_identity,
        strata,
        syzygy,
        poincare_duality,
        ses,
        restrictions,
        locally_free,
        segments,
        duality_pairs,
        pass,
    })
}
