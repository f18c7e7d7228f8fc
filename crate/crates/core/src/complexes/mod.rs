//! Bounded cochain complexes of finitely presented modules, their
//! cohomology, short exact sequences, and isomorphism probing.

mod iso;

use std::collections::BTreeMap;

pub use iso::{iso_probe, iso_probe_with_seed, IsoVerdict, NonIsoReason, DEFAULT_SEED};

use crate::invariants::HilbertSeries;
use crate::module::{homology, FpHom, FpModule, ModuleError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("{positions} positions need {} differentials, got {differentials}", positions.saturating_sub(1))]
    Length { positions: usize, differentials: usize },
    #[error("differential at position {position} does not go between the neighbouring modules")]
    Mismatch { position: i64 },
    #[error("d ∘ d is not zero at position {position}")]
    NotAComplex { position: i64 },
    #[error("maps are not composable")]
    NotComposable,
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// A cochain complex `C_s -> C_{s+1} -> ... -> C_e` with degree-preserving
/// differentials. `d_i` leaves position `i`.
#[derive(Clone, Debug)]
pub struct GradedComplex {
    start: i64,
    positions: Vec<FpModule>,
    differentials: Vec<FpHom>,
}

fn same_module(a: &FpModule, b: &FpModule) -> bool {
    a.generators() == b.generators() && a.presentation() == b.presentation()
}

impl GradedComplex {
    /// Validates shapes and that consecutive differentials compose to zero.
    pub fn new(start: i64, positions: Vec<FpModule>, differentials: Vec<FpHom>) -> Result<Self, ComplexError> {
        if positions.is_empty() || differentials.len() + 1 != positions.len() {
            return Err(ComplexError::Length {
                positions: positions.len(),
                differentials: differentials.len(),
            });
        }
        for (k, d) in differentials.iter().enumerate() {
            if !same_module(d.source(), &positions[k]) || !same_module(d.target(), &positions[k + 1]) {
                return Err(ComplexError::Mismatch {
                    position: start + k as i64,
                });
            }
        }
        for (k, w) in differentials.windows(2).enumerate() {
            if !w[0].compose(&w[1])?.is_zero() {
                return Err(ComplexError::NotAComplex {
                    position: start + k as i64,
                });
            }
        }
        Ok(GradedComplex {
            start,
            positions,
            differentials,
        })
    }

    /// Prepends `aug: H -> C_start`, so `H` sits at position `start - 1`.
    pub fn augmented(&self, aug: FpHom) -> Result<Self, ComplexError> {
        let mut positions = vec![aug.source().clone()];
        positions.extend(self.positions.iter().cloned());
        let mut differentials = vec![aug];
        differentials.extend(self.differentials.iter().cloned());
        GradedComplex::new(self.start - 1, positions, differentials)
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn end(&self) -> i64 {
        self.start + self.positions.len() as i64 - 1
    }

    pub fn ring_rank(&self) -> usize {
        self.positions[0].ring_rank()
    }

    /// The module at position `i`; zero outside the complex.
    pub fn module(&self, i: i64) -> FpModule {
        self.index(i)
            .map(|k| self.positions[k].clone())
            .unwrap_or_else(|| FpModule::zero(self.ring_rank()))
    }

    /// `d_i`, if both ends lie in the complex.
    pub fn differential(&self, i: i64) -> Option<&FpHom> {
        self.index(i).and_then(|k| self.differentials.get(k))
    }

    fn index(&self, i: i64) -> Option<usize> {
        (i >= self.start && i <= self.end()).then(|| (i - self.start) as usize)
    }

    /// `ker d_i / im d_{i-1}`.
    pub fn cohomology_at(&self, i: i64) -> Result<FpModule, ComplexError> {
        if self.index(i).is_none() {
            return Ok(FpModule::zero(self.ring_rank()));
        }
        Ok(homology(&self.module(i), self.differential(i - 1), self.differential(i))?)
    }

    /// Which positions have vanishing cohomology.
    pub fn exactness(&self) -> Result<ExactnessReport, ComplexError> {
        let mut vanishing = BTreeMap::new();
        for i in self.start..=self.end() {
            vanishing.insert(i, self.cohomology_at(i)?.is_zero());
        }
        Ok(ExactnessReport {
            start: self.start,
            vanishing,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub start: i64,
    pub vanishing: BTreeMap<i64, bool>,
}

impl ExactnessReport {
    /// Positions with zero cohomology.
    pub fn exact_positions(&self) -> Vec<i64> {
        self.vanishing.iter().filter(|(_, &v)| v).map(|(&i, _)| i).collect()
    }

    /// The last position of the initial run of exact positions; `start - 1`
    /// when the complex is not exact at its first position.
    pub fn exact_through(&self) -> i64 {
        self.vanishing
            .iter()
            .take_while(|(_, &v)| v)
            .last()
            .map_or(self.start - 1, |(&i, _)| i)
    }

    pub fn is_exact(&self) -> bool {
        self.vanishing.values().all(|&v| v)
    }
}

/// Exactness positions of an augmented complex.
pub fn exactness_positions(c: &GradedComplex) -> Result<ExactnessReport, ComplexError> {
    c.exactness()
}

/// Which legs of `0 -> A -f-> B -g-> C -> 0` hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesVerdict {
    pub injective: bool,
    pub composite_zero: bool,
    pub exact_middle: bool,
    pub surjective: bool,
    pub hilbert_additive: bool,
}

impl SesVerdict {
    pub fn passes(&self) -> bool {
        self.injective && self.composite_zero && self.exact_middle && self.surjective && self.hilbert_additive
    }

    /// Names of the failing legs.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.injective {
            out.push("injectivity");
        }
        if !self.composite_zero {
            out.push("composite");
        }
        if !self.exact_middle {
            out.push("middle");
        }
        if !self.surjective {
            out.push("surjectivity");
        }
        if !self.hilbert_additive {
            out.push("hilbert-additivity");
        }
        out
    }
}

pub fn verify_ses(f: &FpHom, g: &FpHom) -> Result<SesVerdict, ComplexError> {
    if !same_module(f.target(), g.source()) {
        return Err(ComplexError::NotComposable);
    }
    let composite_zero = f.compose(g)?.is_zero();
    let injective = f.is_injective()?;
    let surjective = g.is_surjective()?;
    let exact_middle = composite_zero && homology(f.target(), Some(f), Some(g))?.is_zero();
    let hs = |m: &FpModule| HilbertSeries::of(m);
    let hilbert_additive = hs(f.target()) == hs(f.source()).add(&hs(g.target()));
    Ok(SesVerdict {
        injective,
        composite_zero,
        exact_middle,
        surjective,
        hilbert_additive,
    })
}
