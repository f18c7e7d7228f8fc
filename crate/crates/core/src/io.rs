//! JSON forms of modules, matrices, complexes and moment graphs.
//!
//! Polynomials are strings such as `"3/2*t1^2*t2 - t3"`. A matrix is a list
//! of rows, one row per target generator, so column `j` holds the image of
//! source generator `j`. A module lists its generator degrees and its
//! relations, each relation a vector with one entry per generator.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complexes::{ComplexError, GradedComplex};
use crate::module::{FpHom, FpModule, FreeModule, ModuleError, PolyMatrix};
use crate::ring::{parse_poly, GradedPoly, RingError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{context}: {source}")]
    Ring {
        context: String,
        #[source]
        source: RingError,
    },
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("{0}")]
    Invalid(String),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json(e.to_string())
    }
}

pub type MatrixJson = Vec<Vec<String>>;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub ring_rank: usize,
    pub generators: Vec<i64>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

impl ModuleJson {
    pub fn to_module(&self) -> Result<FpModule, IoError> {
        let r = self.ring_rank;
        let relations = self
            .relations
            .iter()
            .enumerate()
            .map(|(k, rel)| {
                rel.iter()
                    .map(|s| parse(s, r, &format!("relation {k}")))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FpModule::from_relations(FreeModule::new(r, self.generators.clone()), &relations)?)
    }

    pub fn from_module(m: &FpModule) -> Self {
        ModuleJson {
            ring_rank: m.ring_rank(),
            generators: m.generators().degrees().to_vec(),
            relations: m
                .relations()
                .iter()
                .map(|rel| rel.iter().map(|p| p.to_string()).collect())
                .collect(),
        }
    }
}

fn parse(s: &str, r: usize, context: &str) -> Result<GradedPoly, IoError> {
    parse_poly(s, r).map_err(|source| IoError::Ring {
        context: context.to_string(),
        source,
    })
}

/// Reads a `rows x cols` matrix. An empty list stands for the matrix with
/// no rows.
pub fn parse_matrix(rows: &MatrixJson, r: usize, nrows: usize, ncols: usize) -> Result<PolyMatrix, IoError> {
    if rows.len() != nrows {
        return Err(IoError::Shape(format!("matrix has {} rows, expected {nrows}", rows.len())));
    }
    let mut parsed = Vec::with_capacity(nrows);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != ncols {
            return Err(IoError::Shape(format!("row {i} has {} entries, expected {ncols}", row.len())));
        }
        parsed.push(
            row.iter()
                .enumerate()
                .map(|(j, s)| parse(s, r, &format!("entry ({i}, {j})")))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(PolyMatrix::from_rows(r, ncols, &parsed))
}

pub fn matrix_to_json(m: &PolyMatrix) -> MatrixJson {
    (0..m.rows()).map(|i| m.row(i).iter().map(|p| p.to_string()).collect()).collect()
}

/// A homomorphism between two modules given by its matrix.
pub fn parse_hom(source: &FpModule, target: &FpModule, rows: &MatrixJson) -> Result<FpHom, IoError> {
    let m = parse_matrix(rows, source.ring_rank(), target.num_generators(), source.num_generators())?;
    Ok(FpHom::new(source.clone(), target.clone(), m)?)
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AugmentationJson {
    pub module: ModuleJson,
    pub matrix: MatrixJson,
}

/// `{"positions": {i: module}, "differentials": {i: matrix}, "augmentation":
/// {"module": ..., "matrix": ...}}`; differential `i` leaves position `i`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub positions: BTreeMap<i64, ModuleJson>,
    #[serde(default)]
    pub differentials: BTreeMap<i64, MatrixJson>,
    #[serde(default)]
    pub augmentation: Option<AugmentationJson>,
}

impl ComplexJson {
    /// The complex, and its augmented version when an augmentation is given.
    pub fn to_complex(&self) -> Result<(GradedComplex, Option<GradedComplex>), IoError> {
        let (&start, _) = self
            .positions
            .iter()
            .next()
            .ok_or_else(|| IoError::Invalid("complex has no positions".into()))?;
        let end = *self.positions.keys().next_back().unwrap();
        let mut modules = Vec::new();
        for i in start..=end {
            let m = self
                .positions
                .get(&i)
                .ok_or_else(|| IoError::Invalid(format!("position {i} is missing")))?;
            modules.push(m.to_module()?);
        }
        if let Some(&k) = self.differentials.keys().find(|&&k| k < start || k >= end) {
            return Err(IoError::Invalid(format!("differential {k} leaves the complex")));
        }
        let mut maps = Vec::new();
        for i in start..end {
            let (s, t) = (&modules[(i - start) as usize], &modules[(i - start + 1) as usize]);
            let hom = match self.differentials.get(&i) {
                Some(rows) => parse_hom(s, t, rows)?,
                None => FpHom::zero(s, t),
            };
            maps.push(hom);
        }
        let complex = GradedComplex::new(start, modules.clone(), maps)?;
        let augmented = match &self.augmentation {
            None => None,
            Some(a) => {
                let h = a.module.to_module()?;
                let aug = parse_hom(&h, &modules[0], &a.matrix)?;
                Some(complex.augmented(aug)?)
            }
        };
        Ok((complex, augmented))
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub v: String,
    pub w: String,
    pub weight: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MomentGraphJson {
    pub rank: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

pub(crate) fn parse_weight(s: &str, r: usize) -> Result<GradedPoly, IoError> {
    parse(s, r, "edge weight")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_round_trip() {
        let text = r#"{"ring_rank": 2, "generators": [0, 2], "relations": [["t1^2", "-t1"], ["t1*t2", "0"]]}"#;
        let j: ModuleJson = serde_json::from_str(text).unwrap();
        let m = j.to_module().unwrap();
        assert_eq!(m.num_generators(), 2);
        let back = ModuleJson::from_module(&m);
        assert_eq!(back.to_module().unwrap().presentation(), m.presentation());
    }

    #[test]
    fn bad_input_is_reported() {
        let j: ModuleJson = serde_json::from_str(r#"{"ring_rank": 1, "generators": [0], "relations": [["t2"]]}"#).unwrap();
        assert!(matches!(j.to_module(), Err(IoError::Ring { .. })));
        let j: ModuleJson = serde_json::from_str(r#"{"ring_rank": 1, "generators": [0, 0], "relations": [["t1", "t1^2"]]}"#).unwrap();
        assert!(matches!(j.to_module(), Err(IoError::Module(ModuleError::Inhomogeneous { .. }))));
        assert!(serde_json::from_str::<ModuleJson>(r#"{"ring_rank": 1}"#).is_err());
    }

    #[test]
    fn complex_from_json() {
        let text = r#"{
            "positions": {"0": {"ring_rank": 1, "generators": [2]}, "1": {"ring_rank": 1, "generators": [0]}},
            "differentials": {"0": [["t1"]]}
        }"#;
        let j: ComplexJson = serde_json::from_str(text).unwrap();
        let (c, aug) = j.to_complex().unwrap();
        assert!(aug.is_none());
        assert_eq!(c.cohomology_at(1).unwrap().dim_in_degree(0), 1);
    }
}
