//! Report documents. Every report has the same envelope; `result` depends on
//! the command.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use eqhom::atiyah_bredon::BundleReport;

pub const REPORT_SCHEMA: &str = "eqhom.report/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub max_degree: i64,
    pub exponent: u32,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorReport {
    /// `"parse"`, `"verification"` or `"internal"`.
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report<T> {
    pub schema: String,
    pub command: String,
    pub inputs: Vec<String>,
    pub options: Options,
    pub pass: bool,
    pub result: Option<T>,
    pub error: Option<ErrorReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolveReport {
    pub ring_rank: usize,
    pub length: usize,
    /// Generator degrees of each free module, position 0 first.
    pub generator_degrees: Vec<Vec<i64>>,
    pub betti_numbers: Vec<usize>,
    pub minimal: bool,
    pub hilbert_numerator: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtEntry {
    pub p: usize,
    pub zero: bool,
    /// Numerator of the Hilbert series of `Ext^p(M, R)`.
    pub hilbert: String,
    /// The same for `Ext^p(M, R)[p]`.
    pub hilbert_shifted: String,
    pub generator_degrees: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtReport {
    pub ring_rank: usize,
    pub entries: Vec<ExtEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantsReport {
    pub dim: Option<usize>,
    pub depth: Option<usize>,
    pub cm: bool,
    pub syzygy_order: String,
    pub ext_hilbert: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PositionReport {
    pub position: i64,
    pub zero: bool,
    pub hilbert: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyReport {
    pub start: i64,
    pub end: i64,
    pub cohomology: Vec<PositionReport>,
    pub exact_positions: Vec<i64>,
    pub exact_through: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexReport {
    pub complex: CohomologyReport,
    pub augmented: Option<CohomologyReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GkmReport {
    pub rank: usize,
    pub vertices: usize,
    pub edges: usize,
    pub cohomology_hilbert: String,
    pub generator_degrees: Vec<i64>,
    pub syzygy_order: String,
    pub contains_constants: bool,
    pub torsion_free: bool,
    pub truncated: bool,
    pub strata_hilbert: Vec<String>,
    pub augmented_exact_positions: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalEntry {
    pub j: usize,
    pub degree: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MismatchReport {
    pub j: usize,
    pub degree: i64,
    pub local_cohomology: usize,
    pub ext: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalDualityReport {
    pub window: (i64, i64),
    pub exponent: u32,
    pub required_exponent: u32,
    pub checked: usize,
    pub mismatches: Vec<MismatchReport>,
    pub local_cohomology: Vec<LocalEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SesVerifyReport {
    pub tag: String,
    pub injective: bool,
    pub composite_zero: bool,
    pub exact_middle: bool,
    pub surjective: bool,
    pub hilbert_additive: bool,
}
