//! Fixtures shipped with the crate.

use super::{GkmError, MomentGraph};
use crate::io::MomentGraphJson;

const BUNDLES: &[(&str, &str)] = &[
    ("point-r1", include_str!("../../../../fixtures/point-r1.json")),
    ("point-r2", include_str!("../../../../fixtures/point-r2.json")),
    ("point-r3", include_str!("../../../../fixtures/point-r3.json")),
    ("cp1", include_str!("../../../../fixtures/cp1.json")),
    ("cp2", include_str!("../../../../fixtures/cp2.json")),
    ("cp1xcp1", include_str!("../../../../fixtures/cp1xcp1.json")),
    ("s2-rotation", include_str!("../../../../fixtures/s2-rotation.json")),
    ("s3-free", include_str!("../../../../fixtures/s3-free.json")),
    ("torus-r1", include_str!("../../../../fixtures/torus-r1.json")),
    ("torus-r2", include_str!("../../../../fixtures/torus-r2.json")),
];

const MODULES: &[(&str, &str)] = &[
    ("koszul-k", include_str!("../../../../fixtures/koszul-k.json")),
    ("r1-free", include_str!("../../../../fixtures/r1-free.json")),
];

const GRAPHS: &[(&str, &str)] = &[
    ("point", include_str!("../../../../fixtures/graphs/point.json")),
    ("cp1", include_str!("../../../../fixtures/graphs/cp1.json")),
    ("cp2", include_str!("../../../../fixtures/graphs/cp2.json")),
    ("cp1xcp1", include_str!("../../../../fixtures/graphs/cp1xcp1.json")),
];

/// Names and JSON text of the bundled fixture bundles.
pub fn bundled_fixtures() -> &'static [(&'static str, &'static str)] {
    BUNDLES
}

pub fn bundled_fixture(name: &str) -> Option<&'static str> {
    BUNDLES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Names and JSON text of the bundled standalone modules.
pub fn bundled_modules() -> &'static [(&'static str, &'static str)] {
    MODULES
}

pub fn bundled_module(name: &str) -> Option<&'static str> {
    MODULES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// The bundled moment graphs.
pub fn bundled_graphs() -> Result<Vec<(&'static str, MomentGraph)>, GkmError> {
    GRAPHS
        .iter()
        .map(|(n, t)| {
            let j: MomentGraphJson = serde_json::from_str(t).map_err(crate::io::IoError::from)?;
            Ok((*n, MomentGraph::from_json(&j)?))
        })
        .collect()
}
