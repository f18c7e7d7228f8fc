//! Orbit-filtration data, the Atiyah–Bredon complex, and the checks run
//! against it: the Ext identity, Cohen–Macaulay strata, partial exactness
//! versus syzygy order, short exact sequences, localization and degree
//! shifts.

mod fixture;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use fixture::{
    load_bundle, load_ses, verify_bundle, BundleReport, BundleStatus, DualityPair, DualityPairReport, ExtIdentityRowReport, FixtureBundle,
    LocallyFreeFixture, LocallyFreeReport, RestrictionFixture, RestrictionReport, SegmentFixture, SegmentReport,
    SesReport, StratumReport, SyzygyReport, BUNDLE_SCHEMA,
};

use crate::complexes::{iso_probe_with_seed, verify_ses, ComplexError, GradedComplex, IsoVerdict, SesVerdict};
use crate::invariants::{ext_table, is_cohen_macaulay, syzygy_order, CmVerdict, HilbertSeries, InvariantError, SyzygyOrder};
use crate::io::IoError;
use crate::module::{FpHom, FpModule, ModuleError};
use crate::ring::GradedPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AbError {
    #[error("fixture rejected: {0}")]
    Rejected(ComplexError),
    #[error("{0}")]
    Shape(String),
    #[error("no homology module: supply one or orientable Poincaré duality data")]
    MissingHomology,
    #[error("{0}")]
    Gkm(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Io(#[from] IoError),
}

impl From<ComplexError> for AbError {
    fn from(e: ComplexError) -> Self {
        match e {
            ComplexError::Module(m) => AbError::Module(m),
            other => AbError::Rejected(other),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientTag {
    Constant,
    Twisted,
}

/// Poincaré duality data: homology is cohomology moved down by `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PdMetadata {
    pub orientable: bool,
    pub n: i64,
    #[serde(default = "constant_tag")]
    pub coefficients: CoefficientTag,
}

fn constant_tag() -> CoefficientTag {
    CoefficientTag::Constant
}

/// Strata `AB_0..AB_r` in the shifted grading, the differentials between
/// them, and `H_T^*(X)` with its augmentation into `AB_0`.
#[derive(Clone, Debug)]
pub struct OrbitFiltrationData {
    strata: Vec<FpModule>,
    differentials: Vec<FpHom>,
    total: FpModule,
    augmentation: FpHom,
    homology: Option<FpModule>,
    pd: Option<PdMetadata>,
    truncated: bool,
}

impl OrbitFiltrationData {
    /// Checks that there are `r + 1` strata over the same ring and that the
    /// augmented sequence is a complex of degree-preserving maps.
    pub fn new(
        strata: Vec<FpModule>,
        differentials: Vec<FpHom>,
        total: FpModule,
        augmentation: FpHom,
    ) -> Result<Self, AbError> {
        let r = total.ring_rank();
        if strata.len() != r + 1 {
            return Err(AbError::Shape(format!("{} strata for ring rank {r}, expected {}", strata.len(), r + 1)));
        }
        if let Some(i) = strata.iter().position(|m| m.ring_rank() != r) {
            return Err(AbError::Shape(format!("stratum {i} lives over a ring of another rank")));
        }
        let data = OrbitFiltrationData {
            strata,
            differentials,
            total,
            augmentation,
            homology: None,
            pd: None,
            truncated: false,
        };
        build_ab_complex(&data, true)?;
        Ok(data)
    }

    pub fn with_homology(mut self, homology: FpModule) -> Result<Self, AbError> {
        if homology.ring_rank() != self.ring_rank() {
            return Err(AbError::Shape("homology module lives over a ring of another rank".into()));
        }
        self.homology = Some(homology);
        Ok(self)
    }

    pub fn with_pd(mut self, pd: PdMetadata) -> Self {
        self.pd = Some(pd);
        self
    }

    pub(crate) fn mark_truncated(mut self, truncated: bool) -> Self {
        self.truncated = truncated;
        self
    }

    pub fn ring_rank(&self) -> usize {
        self.total.ring_rank()
    }

    pub fn strata(&self) -> &[FpModule] {
        &self.strata
    }

    pub fn stratum(&self, i: usize) -> &FpModule {
        &self.strata[i]
    }

    pub fn differentials(&self) -> &[FpHom] {
        &self.differentials
    }

    pub fn total(&self) -> &FpModule {
        &self.total
    }

    pub fn augmentation(&self) -> &FpHom {
        &self.augmentation
    }

    pub fn pd(&self) -> Option<&PdMetadata> {
        self.pd.as_ref()
    }

    /// Strata above level 1 were not supplied and stand in as zero.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn supplied_homology(&self) -> Option<&FpModule> {
        self.homology.as_ref()
    }

    /// `H^T_*(X)`: the supplied module, or `H_T^*(X)` moved down by `n` for
    /// orientable duality data.
    pub fn homology(&self) -> Result<(FpModule, HomologySource), AbError> {
        if let Some(h) = &self.homology {
            return Ok((h.clone(), HomologySource::Supplied));
        }
        match &self.pd {
            Some(pd) if pd.orientable => Ok((self.total.shift(-pd.n), HomologySource::PoincareDuality { n: pd.n })),
            _ => Err(AbError::MissingHomology),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HomologySource {
    Supplied,
    PoincareDuality { n: i64 },
}

/// `AB_0 -> ... -> AB_r` at positions `0..r`, preceded by `H_T^*(X)` at
/// position `-1` when `augmented`.
pub fn build_ab_complex(data: &OrbitFiltrationData, augmented: bool) -> Result<GradedComplex, AbError> {
    let c = GradedComplex::new(0, data.strata.clone(), data.differentials.clone())?;
    if augmented {
        Ok(c.augmented(data.augmentation.clone())?)
    } else {
        Ok(c)
    }
}

/// One row of the Ext identity check: `H^i(AB)` against `Ext^i(H^T_*, R)`
/// and against `Ext^i(H^T_*, R)[i]`.
#[derive(Clone, Debug)]
pub struct ExtIdentityRow {
    pub i: usize,
    pub cohomology: FpModule,
    pub ext: FpModule,
    pub both_zero: bool,
    pub unshifted: IsoVerdict,
    pub shifted: IsoVerdict,
}

impl ExtIdentityRow {
    pub fn passes(&self) -> bool {
        self.both_zero || self.unshifted.is_iso() || self.shifted.is_iso()
    }

    /// Which grading matched: `"zero"`, `"unshifted"`, `"shifted"` or `"none"`.
    pub fn matched(&self) -> &'static str {
        if self.both_zero {
            "zero"
        } else if self.unshifted.is_iso() {
            "unshifted"
        } else if self.shifted.is_iso() {
            "shifted"
        } else {
            "none"
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExtIdentityReport {
    pub homology_source: HomologySource,
    pub rows: Vec<ExtIdentityRow>,
}

impl ExtIdentityReport {
    pub fn passes(&self) -> bool {
        self.rows.iter().all(ExtIdentityRow::passes)
    }
}

pub fn verify_ext_identity(data: &OrbitFiltrationData, seed: u64) -> Result<ExtIdentityReport, AbError> {
    let (homology, homology_source) = data.homology()?;
    let complex = build_ab_complex(data, false)?;
    let ext = ext_table(&homology);
    let mut rows = Vec::new();
    for i in 0..=data.ring_rank() {
        let cohomology = complex.cohomology_at(i as i64)?;
        let e = ext.get(i).clone();
        let both_zero = cohomology.is_zero() && e.is_zero();
        let unshifted = iso_probe_with_seed(&cohomology, &e, seed)?;
        let shifted = iso_probe_with_seed(&cohomology, &ext.shifted(i), seed)?;
        rows.push(ExtIdentityRow {
            i,
            cohomology,
            ext: e,
            both_zero,
            unshifted,
            shifted,
        });
    }
    Ok(ExtIdentityReport { homology_source, rows })
}

/// `AB_i` is zero or Cohen–Macaulay of dimension `r - i`, for each `i`.
pub fn verify_stratum_cm(data: &OrbitFiltrationData) -> Result<Vec<CmVerdict>, AbError> {
    let r = data.ring_rank();
    data.strata
        .iter()
        .enumerate()
        .map(|(i, m)| Ok(is_cohen_macaulay(m, Some(r - i))?))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyEquivalenceRow {
    pub j: usize,
    /// The augmented complex is exact at positions `-1..=j-2`.
    pub exact: bool,
    pub syzygy: bool,
}

impl SyzygyEquivalenceRow {
    pub fn agrees(&self) -> bool {
        self.exact == self.syzygy
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyEquivalenceReport {
    pub exact_through: i64,
    pub syzygy_order: SyzygyOrder,
    pub rows: Vec<SyzygyEquivalenceRow>,
}

impl SyzygyEquivalenceReport {
    pub fn passes(&self) -> bool {
        self.rows.iter().all(SyzygyEquivalenceRow::agrees)
    }
}

fn syzygy_row(exact_through: i64, order: SyzygyOrder, j: usize) -> SyzygyEquivalenceRow {
    SyzygyEquivalenceRow {
        j,
        exact: exact_through >= j as i64 - 2,
        syzygy: order.at_least(j),
    }
}

/// Exactness of the augmented complex through position `j - 2` against
/// `H_T^*(X)` being a `j`-th syzygy.
pub fn verify_syzygy_equivalence(data: &OrbitFiltrationData, j: usize) -> Result<SyzygyEquivalenceRow, AbError> {
    let exact_through = build_ab_complex(data, true)?.exactness()?.exact_through();
    Ok(syzygy_row(exact_through, syzygy_order(&data.total), j))
}

/// [`verify_syzygy_equivalence`] for every `0 <= j <= r`.
pub fn verify_syzygy_equivalence_all(data: &OrbitFiltrationData) -> Result<SyzygyEquivalenceReport, AbError> {
    let exact_through = build_ab_complex(data, true)?.exactness()?.exact_through();
    let order = syzygy_order(&data.total);
    Ok(SyzygyEquivalenceReport {
        exact_through,
        syzygy_order: order,
        rows: (0..=data.ring_rank()).map(|j| syzygy_row(exact_through, order, j)).collect(),
    })
}

/// A claimed short exact sequence `0 -> A -f-> B -g-> C -> 0`, tagged with
/// the statement it instantiates.
#[derive(Clone, Debug)]
pub struct SesFixture {
    pub tag: String,
    pub f: FpHom,
    pub g: FpHom,
}

impl SesFixture {
    pub fn new(tag: impl Into<String>, f: FpHom, g: FpHom) -> Result<Self, AbError> {
        let ses = SesFixture { tag: tag.into(), f, g };
        if ses.f.target().generators() != ses.g.source().generators()
            || ses.f.target().presentation() != ses.g.source().presentation()
        {
            return Err(AbError::Shape(format!("{}: f and g do not meet at the middle module", ses.tag)));
        }
        Ok(ses)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DuflotVerdict {
    pub tag: String,
    pub ses: SesVerdict,
}

impl DuflotVerdict {
    pub fn passes(&self) -> bool {
        self.ses.passes()
    }
}

pub fn verify_duflot(fixture: &SesFixture) -> Result<DuflotVerdict, AbError> {
    Ok(DuflotVerdict {
        tag: fixture.tag.clone(),
        ses: verify_ses(&fixture.f, &fixture.g)?,
    })
}

/// Default bound on the power of `s` searched by the localization check.
pub const DEFAULT_TORSION_POWER: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum TorsionVerdict {
    /// `s^kernel_power` kills the kernel and `s^cokernel_power` the cokernel.
    Certified { kernel_power: u32, cokernel_power: u32 },
    Unknown { bound: u32 },
}

impl TorsionVerdict {
    pub fn passes(&self) -> bool {
        matches!(self, TorsionVerdict::Certified { .. })
    }
}

impl fmt::Display for TorsionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionVerdict::Certified {
                kernel_power,
                cokernel_power,
            } => write!(f, "certified (kernel s^{kernel_power}, cokernel s^{cokernel_power})"),
            TorsionVerdict::Unknown { bound } => write!(f, "unknown up to s^{bound}"),
        }
    }
}

/// Smallest `k <= bound` with `s^k` killing every generator of `m`.
fn annihilating_power(m: &FpModule, s: &GradedPoly, bound: u32) -> Option<u32> {
    let r = m.ring_rank();
    let n = m.num_generators();
    (0..=bound).find(|&k| {
        let sk = s.pow(k);
        (0..n).all(|i| {
            let v: Vec<GradedPoly> = (0..n).map(|j| if j == i { sk.clone() } else { GradedPoly::zero(r) }).collect();
            m.is_zero_element(&v)
        })
    })
}

/// Whether `restriction` becomes an isomorphism once the product `s` of
/// `elements` is inverted: its kernel and cokernel must be killed by a power
/// of `s` no larger than `bound`.
pub fn verify_localization_torsion(
    restriction: &FpHom,
    elements: &[GradedPoly],
    bound: u32,
) -> Result<TorsionVerdict, AbError> {
    let r = restriction.source().ring_rank();
    let mut s = GradedPoly::one(r);
    for (k, e) in elements.iter().enumerate() {
        if e.is_zero() || !e.is_homogeneous() || e.rank() != r {
            return Err(AbError::Shape(format!("element {k} is not a nonzero homogeneous polynomial")));
        }
        s = s.checked_mul(e).map_err(ModuleError::from)?;
    }
    let (kernel, _) = restriction.kernel()?;
    let (cokernel, _) = restriction.cokernel()?;
    Ok(
        match (annihilating_power(&kernel, &s, bound), annihilating_power(&cokernel, &s, bound)) {
            (Some(kernel_power), Some(cokernel_power)) => TorsionVerdict::Certified {
                kernel_power,
                cokernel_power,
            },
            _ => TorsionVerdict::Unknown { bound },
        },
    )
}

#[derive(Clone, Debug)]
pub enum LocallyFreeVerdict {
    /// `p = 0`: the two modules compared over `R`.
    Iso(IsoVerdict),
    /// `p = r`: graded dimensions compared over the field.
    Dimensions { matches: bool, window: (i64, i64) },
    /// `0 < p < r` is not decided.
    Unknown,
}

impl LocallyFreeVerdict {
    pub fn passes(&self) -> bool {
        match self {
            LocallyFreeVerdict::Iso(v) => v.is_iso(),
            LocallyFreeVerdict::Dimensions { matches, .. } => *matches,
            LocallyFreeVerdict::Unknown => false,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            LocallyFreeVerdict::Iso(v) => v.label(),
            LocallyFreeVerdict::Dimensions { matches: true, .. } => "dimensions-match",
            LocallyFreeVerdict::Dimensions { matches: false, .. } => "dimensions-differ",
            LocallyFreeVerdict::Unknown => "unknown",
        }
    }
}

/// Compares `total`, a module over `R = Q[t1..tr]`, with `quotient`, a module
/// over `Q[t_{p+1}..t_r]`, moved down by `p`.
pub fn verify_locally_free_shift(
    quotient: &FpModule,
    total: &FpModule,
    p: usize,
    seed: u64,
) -> Result<LocallyFreeVerdict, AbError> {
    let r = total.ring_rank();
    if p > r || quotient.ring_rank() != r - p {
        return Err(AbError::Shape(format!(
            "quotient ring has rank {}, expected {} for p = {p}",
            quotient.ring_rank(),
            r.saturating_sub(p)
        )));
    }
    if p == 0 {
        return Ok(LocallyFreeVerdict::Iso(iso_probe_with_seed(total, quotient, seed)?));
    }
    if p < r {
        return Ok(LocallyFreeVerdict::Unknown);
    }
    // over the field both sides are finite dimensional in each degree
    let q = HilbertSeries::of(quotient).shift(-(p as i64));
    let t = HilbertSeries::of(total);
    if !matches!(t.dimension(), None | Some(0)) {
        return Ok(LocallyFreeVerdict::Dimensions {
            matches: false,
            window: (0, 0),
        });
    }
    let exps: Vec<i64> = q.numerator().keys().chain(t.numerator().keys()).copied().collect();
    let window = (
        exps.iter().copied().min().unwrap_or(0),
        exps.iter().copied().max().unwrap_or(0),
    );
    let matches = (window.0..=window.1).all(|d| q.coefficient(d) == t.coefficient(d));
    Ok(LocallyFreeVerdict::Dimensions { matches, window })
}

/// Indices `p` with `Ext^p(M, R) != 0`, and whether all lie in `(i, j]`.
pub fn verify_ext_vanishing(m: &FpModule, i: i64, j: i64) -> (Vec<usize>, bool) {
    let nonzero = ext_table(m).nonzero();
    let ok = nonzero.iter().all(|&p| (p as i64) > i && (p as i64) <= j);
    (nonzero, ok)
}

/// Hilbert series of `cohomology` in degree `c` equals that of `homology`
/// in degree `c - n`.
pub fn verify_duality_shift(cohomology: &FpModule, homology: &FpModule, n: i64) -> bool {
    HilbertSeries::of(cohomology) == HilbertSeries::of(homology).shift(n)
}

#[cfg(test)]
mod tests;
