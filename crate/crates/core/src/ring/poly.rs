use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Rational, RingError};

/// Degree information for a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyDegree {
    /// The zero polynomial is homogeneous of every degree.
    Any,
    Homogeneous(i64),
    Inhomogeneous,
}

impl PolyDegree {
    /// The degree as an optional integer: `None` unless nonzero homogeneous.
    pub fn value(self) -> Option<i64> {
        match self {
            PolyDegree::Homogeneous(d) => Some(d),
            _ => None,
        }
    }

    /// Whether a polynomial with this degree may sit in degree `d`.
    pub fn admits(self, d: i64) -> bool {
        match self {
            PolyDegree::Any => true,
            PolyDegree::Homogeneous(e) => e == d,
            PolyDegree::Inhomogeneous => false,
        }
    }
}

/// A polynomial in `Q[t1..tr]` with `deg ti = 2`.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedPoly {
    rank: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPoly {
    pub fn zero(rank: usize) -> Self {
        GradedPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, Rational::one())
    }

    pub fn constant(rank: usize, c: Rational) -> Self {
        Self::monomial(rank, Monomial::one(rank), c)
    }

    pub fn from_int(rank: usize, c: i64) -> Self {
        Self::constant(rank, Rational::from_integer(c.into()))
    }

    /// The variable `t{index+1}`.
    pub fn var(rank: usize, index: usize) -> Self {
        Self::monomial(rank, Monomial::var(rank, index), Rational::one())
    }

    pub fn monomial(rank: usize, mono: Monomial, c: Rational) -> Self {
        assert_eq!(mono.rank(), rank);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        GradedPoly { rank, terms }
    }

    /// Builds a polynomial from terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = GradedPoly::zero(rank);
        for (m, c) in terms {
            assert_eq!(m.rank(), rank);
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.rank))
    }

    /// Degree classification; zero reports [`PolyDegree::Any`].
    pub fn degree(&self) -> PolyDegree {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => PolyDegree::Any,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    PolyDegree::Homogeneous(d)
                } else {
                    PolyDegree::Inhomogeneous
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() != PolyDegree::Inhomogeneous
    }

    /// Nonzero constant?
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().is_some_and(Monomial::is_one)
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn scale(&self, c: &Rational) -> GradedPoly {
        if c.is_zero() {
            return GradedPoly::zero(self.rank);
        }
        GradedPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> GradedPoly {
        GradedPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    pub fn checked_add(&self, other: &GradedPoly) -> Result<GradedPoly, RingError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &GradedPoly) -> Result<GradedPoly, RingError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &GradedPoly) -> Result<GradedPoly, RingError> {
        self.check_rank(other)?;
        let mut out = GradedPoly::zero(self.rank);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> GradedPoly {
        let mut acc = GradedPoly::one(self.rank);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The part of `self` in internal degree `d`.
    pub fn homogeneous_part(&self, d: i64) -> GradedPoly {
        GradedPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Reinterprets the polynomial over a larger ring, placing the old
    /// variables at positions `offset..offset+self.rank()`.
    pub fn embed(&self, new_rank: usize, offset: usize) -> GradedPoly {
        assert!(offset + self.rank <= new_rank);
        GradedPoly {
            rank: new_rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0; new_rank];
                    e[offset..offset + self.rank].copy_from_slice(m.exponents());
                    (Monomial::from_exponents(e), c.clone())
                })
                .collect(),
        }
    }

    fn check_rank(&self, other: &GradedPoly) -> Result<(), RingError> {
        if self.rank != other.rank {
            return Err(RingError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }
}

impl<'a> Add<&'a GradedPoly> for &'a GradedPoly {
    type Output = GradedPoly;
    /// Panics on rank mismatch; see [`GradedPoly::checked_add`].
    fn add(self, rhs: &'a GradedPoly) -> GradedPoly {
        self.checked_add(rhs).expect("polynomial rank mismatch")
    }
}

impl<'a> Sub<&'a GradedPoly> for &'a GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: &'a GradedPoly) -> GradedPoly {
        self.checked_sub(rhs).expect("polynomial rank mismatch")
    }
}

impl<'a> Mul<&'a GradedPoly> for &'a GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: &'a GradedPoly) -> GradedPoly {
        self.checked_mul(rhs).expect("polynomial rank mismatch")
    }
}

impl Add for GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: GradedPoly) -> GradedPoly {
        &self + &rhs
    }
}

impl Sub for GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: GradedPoly) -> GradedPoly {
        &self - &rhs
    }
}

impl Mul for GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: GradedPoly) -> GradedPoly {
        &self * &rhs
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        GradedPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        -&self
    }
}

/// Prints terms in decreasing grevlex order, e.g. `t1^2+2*t1*t2-1/2*t2^2`.
/// The output re-parses with [`parse_poly`](super::parse_poly).
impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| MonomialOrder::GrevLex.cmp(b.0, a.0));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            if negative {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedPoly[r={}]({self})", self.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    fn p(s: &str) -> GradedPoly {
        parse_poly(s, 2).unwrap()
    }

    #[test]
    fn monomial_product() {
        let prod = &p("t1") * &p("t2");
        assert_eq!(prod, p("t1*t2"));
        assert_eq!(prod.degree(), PolyDegree::Homogeneous(4));
    }

    #[test]
    fn additive_inverse() {
        let a = p("3*t1^2-1/2*t1*t2+t2^2");
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn binomial_square() {
        let sq = p("t1+t2").pow(2);
        assert_eq!(sq, p("t1^2+2*t1*t2+t2^2"));
        assert_eq!(sq.degree().value(), Some(4));
    }

    #[test]
    fn degree_classification() {
        assert_eq!(parse_poly("t1^3", 1).unwrap().degree(), PolyDegree::Homogeneous(6));
        assert_eq!(GradedPoly::zero(2).degree(), PolyDegree::Any);
        assert_eq!(p("t1+t2^2").degree(), PolyDegree::Inhomogeneous);
        assert_eq!(p("t1+t2^2").degree().value(), None);
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let a = GradedPoly::var(1, 0);
        let b = GradedPoly::var(2, 0);
        assert!(matches!(
            a.checked_mul(&b),
            Err(RingError::RankMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("t2^2 + 2*t1*t2 + t1^2").to_string(), "t1^2+2*t1*t2+t2^2");
        assert_eq!(p("-1/2*t2 + 3").to_string(), "-1/2*t2+3");
        assert_eq!(GradedPoly::zero(2).to_string(), "0");
    }
}
