//! Finitely presented graded modules over `R = Q[t1..tr]`.
//!
//! A module is the cokernel of a degree-preserving map of free modules.
//! Gröbner bases of relation submodules drive every computation; the
//! degree-slice oracle in [`slice`] recomputes the same data by plain linear
//! algebra and shares no code with the Gröbner path.

mod fp;
mod free;
mod groebner;
mod hom_space;
pub mod linalg;
mod presentation;
mod resolution;
pub mod slice;
mod syzygy;

pub use fp::{homology, FpHom, FpModule};
pub use free::{FreeModule, GradedHom, PolyMatrix};
pub use groebner::GroebnerBasis;
pub use hom_space::hom_space_in_degree_zero;
pub(crate) use hom_space::combine;
pub use presentation::{minimize_presentation, Minimized};
pub use resolution::{free_resolution, minimal_resolution, Resolution};
pub use syzygy::{minimal_generators, syzygies};

pub(crate) use free::check_degrees;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("ring rank mismatch: expected {expected}, found {found}")]
    RingRank { expected: usize, found: usize },
    #[error("entry ({row}, {col}) is not homogeneous of degree {expected}")]
    DegreeViolation { row: usize, col: usize, expected: i64 },
    #[error("generator {index} is not homogeneous")]
    Inhomogeneous { index: usize },
    #[error("map does not send relation {relation} of the source into the relations of the target")]
    IllDefinedHom { relation: usize },
    #[error(transparent)]
    Ring(#[from] crate::ring::RingError),
}
