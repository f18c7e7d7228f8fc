use std::fmt;

use num_traits::Zero;

use super::ModuleError;
use crate::ring::{GradedPoly, Rational};

/// A graded free module `⊕ R e_i` with `deg e_i = degrees[i]`.
///
/// A generator in degree `d` spans a copy of `R[d]` in shift notation: the
/// degree `i` piece of `R[d]` is `R_{i-d}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeModule {
    ring_rank: usize,
    degrees: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring_rank: usize, degrees: Vec<i64>) -> Self {
        FreeModule { ring_rank, degrees }
    }

    pub fn zero(ring_rank: usize) -> Self {
        FreeModule::new(ring_rank, Vec::new())
    }

    pub fn ring_rank(&self) -> usize {
        self.ring_rank
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    /// `F[l]`: every generator moves up by `l`.
    pub fn shift(&self, l: i64) -> FreeModule {
        FreeModule::new(self.ring_rank, self.degrees.iter().map(|d| d + l).collect())
    }

    /// The graded dual `Hom(F, R)`: generator degrees negate.
    pub fn dual(&self) -> FreeModule {
        FreeModule::new(self.ring_rank, self.degrees.iter().map(|d| -d).collect())
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        assert_eq!(self.ring_rank, other.ring_rank);
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        FreeModule::new(self.ring_rank, degrees)
    }

    pub fn select(&self, indices: &[usize]) -> FreeModule {
        FreeModule::new(self.ring_rank, indices.iter().map(|&i| self.degrees[i]).collect())
    }

    /// Whether `v` (one polynomial per generator) is homogeneous of degree `d`.
    pub fn is_homogeneous_of(&self, v: &[GradedPoly], d: i64) -> bool {
        v.iter()
            .zip(&self.degrees)
            .all(|(p, g)| p.is_zero() || p.degree().value() == Some(d - g))
    }

    /// Degree of a homogeneous vector, `None` for zero or inhomogeneous input.
    pub fn vector_degree(&self, v: &[GradedPoly]) -> Option<i64> {
        let mut found = None;
        for (p, g) in v.iter().zip(&self.degrees) {
            if p.is_zero() {
                continue;
            }
            let d = p.degree().value()? + g;
            match found {
                None => found = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        found
    }
}

impl fmt::Debug for FreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R^{}{:?}", self.ring_rank, self.degrees)
    }
}

/// A matrix of polynomials, stored row-major.
///
/// Column `j` is the image of the `j`-th source generator written in the
/// target generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    ring_rank: usize,
    rows: usize,
    cols: usize,
    entries: Vec<GradedPoly>,
}

impl PolyMatrix {
    pub fn zeros(ring_rank: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring_rank,
            rows,
            cols,
            entries: vec![GradedPoly::zero(ring_rank); rows * cols],
        }
    }

    pub fn identity(ring_rank: usize, n: usize) -> Self {
        let mut m = Self::zeros(ring_rank, n, n);
        for i in 0..n {
            m.set(i, i, GradedPoly::one(ring_rank));
        }
        m
    }

    /// Builds a matrix from its columns; `rows` is needed when there are none.
    pub fn from_columns(ring_rank: usize, rows: usize, columns: &[Vec<GradedPoly>]) -> Self {
        let mut m = Self::zeros(ring_rank, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has the wrong length");
            for (i, p) in col.iter().enumerate() {
                m.set(i, j, p.clone());
            }
        }
        m
    }

    pub fn from_rows(ring_rank: usize, cols: usize, rows: &[Vec<GradedPoly>]) -> Self {
        let mut m = Self::zeros(ring_rank, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "row {i} has the wrong length");
            for (j, p) in row.iter().enumerate() {
                m.set(i, j, p.clone());
            }
        }
        m
    }

    pub fn ring_rank(&self) -> usize {
        self.ring_rank
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GradedPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: GradedPoly) {
        debug_assert_eq!(p.rank(), self.ring_rank);
        self.entries[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<GradedPoly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<GradedPoly>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<GradedPoly> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GradedPoly::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = Self::zeros(self.ring_rank, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, ModuleError> {
        if self.cols != other.rows {
            return Err(ModuleError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.ring_rank, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = GradedPoly::zero(self.ring_rank);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[GradedPoly]) -> Vec<GradedPoly> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = GradedPoly::zero(self.ring_rank);
                for (k, x) in v.iter().enumerate() {
                    let a = self.get(i, k);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.rows, other.rows, "hconcat row mismatch");
        let mut columns = self.columns();
        columns.extend(other.columns());
        PolyMatrix::from_columns(self.ring_rank, self.rows, &columns)
    }

    /// Stacks `other` below `self`.
    pub fn vconcat(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.cols, "vconcat column mismatch");
        let mut rows: Vec<_> = (0..self.rows).map(|i| self.row(i)).collect();
        rows.extend((0..other.rows).map(|i| other.row(i)));
        PolyMatrix::from_rows(self.ring_rank, self.cols, &rows)
    }

    pub fn select_rows(&self, indices: &[usize]) -> PolyMatrix {
        let rows: Vec<_> = indices.iter().map(|&i| self.row(i)).collect();
        PolyMatrix::from_rows(self.ring_rank, self.cols, &rows)
    }

    pub fn select_columns(&self, indices: &[usize]) -> PolyMatrix {
        let cols: Vec<_> = indices.iter().map(|&j| self.column(j)).collect();
        PolyMatrix::from_columns(self.ring_rank, self.rows, &cols)
    }

    pub fn scale(&self, c: &Rational) -> PolyMatrix {
        PolyMatrix {
            ring_rank: self.ring_rank,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix {
            ring_rank: self.ring_rank,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    /// Matrix of constant terms.
    pub fn constant_part(&self) -> Vec<Vec<Rational>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).constant_term()).collect())
            .collect()
    }

    pub fn has_unit_entry(&self) -> bool {
        self.entries.iter().any(|p| !p.constant_term().is_zero())
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A degree-preserving homomorphism of graded free modules.
///
/// Entry `(i, j)` is zero or homogeneous of degree
/// `source.degree(j) - target.degree(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedHom {
    pub(crate) source: FreeModule,
    pub(crate) target: FreeModule,
    pub(crate) matrix: PolyMatrix,
}

impl GradedHom {
    pub fn new(source: FreeModule, target: FreeModule, matrix: PolyMatrix) -> Result<Self, ModuleError> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(ModuleError::Shape(format!(
                "matrix is {}x{} but the map is R^{} -> R^{}",
                matrix.rows(),
                matrix.cols(),
                source.rank(),
                target.rank()
            )));
        }
        if source.ring_rank() != target.ring_rank() || matrix.ring_rank() != source.ring_rank() {
            return Err(ModuleError::RingRank {
                expected: source.ring_rank(),
                found: matrix.ring_rank().max(target.ring_rank()),
            });
        }
        check_degrees(&source, &target, &matrix)?;
        Ok(GradedHom {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(free: &FreeModule) -> Self {
        GradedHom {
            source: free.clone(),
            target: free.clone(),
            matrix: PolyMatrix::identity(free.ring_rank(), free.rank()),
        }
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn compose(&self, after: &GradedHom) -> Result<GradedHom, ModuleError> {
        if after.source != self.target {
            return Err(ModuleError::Shape("maps are not composable".into()));
        }
        GradedHom::new(self.source.clone(), after.target.clone(), after.matrix.mul(&self.matrix)?)
    }

    /// The dual map `Hom(target, R) -> Hom(source, R)`.
    pub fn dual(&self) -> GradedHom {
        GradedHom {
            source: self.target.dual(),
            target: self.source.dual(),
            matrix: self.matrix.transpose(),
        }
    }

    /// True when every entry lies in the maximal ideal `m = (t1..tr)`.
    pub fn is_minimal(&self) -> bool {
        !self.matrix.has_unit_entry()
    }
}

impl fmt::Debug for GradedHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?} {:?}", self.source, self.target, self.matrix)
    }
}

pub(crate) fn check_degrees(
    source: &FreeModule,
    target: &FreeModule,
    matrix: &PolyMatrix,
) -> Result<(), ModuleError> {
    for i in 0..target.rank() {
        for j in 0..source.rank() {
            let expected = source.degree(j) - target.degree(i);
            if !matrix.get(i, j).degree().admits(expected) {
                return Err(ModuleError::DegreeViolation {
                    row: i,
                    col: j,
                    expected,
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    #[test]
    fn rejects_entries_of_the_wrong_degree() {
        let src = FreeModule::new(1, vec![2]);
        let tgt = FreeModule::new(1, vec![0]);
        let ok = PolyMatrix::from_rows(1, 1, &[vec![parse_poly("3*t1", 1).unwrap()]]);
        assert!(GradedHom::new(src.clone(), tgt.clone(), ok).is_ok());
        let bad = PolyMatrix::from_rows(1, 1, &[vec![parse_poly("t1^2", 1).unwrap()]]);
        assert!(matches!(
            GradedHom::new(src, tgt, bad),
            Err(ModuleError::DegreeViolation { expected: 2, .. })
        ));
    }

    #[test]
    fn dual_negates_degrees_and_transposes() {
        let src = FreeModule::new(2, vec![2, 2]);
        let tgt = FreeModule::new(2, vec![0]);
        let m = PolyMatrix::from_rows(2, 2, &[vec![GradedPoly::var(2, 0), GradedPoly::var(2, 1)]]);
        let h = GradedHom::new(src, tgt, m).unwrap();
        let d = h.dual();
        assert_eq!(d.source().degrees(), &[0]);
        assert_eq!(d.target().degrees(), &[-2, -2]);
        // the dual is again degree-preserving
        assert!(GradedHom::new(d.source().clone(), d.target().clone(), d.matrix().clone()).is_ok());
    }
}
