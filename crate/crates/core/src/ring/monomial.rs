use std::fmt;

/// A monomial `t1^a1 * ... * tr^ar`, stored as its exponent vector.
///
/// The derived `Ord` is plain lexicographic comparison of exponent vectors and
/// is only used for canonical storage; Gröbner code goes through
/// [`MonomialOrder`](super::MonomialOrder).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(rank: usize) -> Self {
        Monomial(vec![0; rank])
    }

    pub fn var(rank: usize, index: usize) -> Self {
        assert!(index < rank, "variable t{} out of range for rank {rank}", index + 1);
        let mut exps = vec![0; rank];
        exps[index] = 1;
        Monomial(exps)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Sum of the exponents.
    pub fn exponent_sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Internal (topological) degree: every variable has degree 2.
    pub fn degree(&self) -> i64 {
        2 * i64::from(self.exponent_sum())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.rank(), other.rank());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.rank(), other.rank());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.rank(), other.rank());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * n).collect())
    }

    /// All monomials in `rank` variables whose exponents sum to `total`,
    /// in lexicographically decreasing order.
    pub fn all_of_exponent_sum(rank: usize, total: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        if rank == 0 {
            if total == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        let mut current = vec![0u32; rank];
        fill(&mut current, 0, total, &mut out);
        out
    }

    /// All monomials of internal degree `degree`; empty when `degree` is odd
    /// or negative.
    pub fn all_of_degree(rank: usize, degree: i64) -> Vec<Monomial> {
        if degree < 0 || degree % 2 != 0 {
            return Vec::new();
        }
        Self::all_of_exponent_sum(rank, (degree / 2) as u32)
    }
}

fn fill(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Monomial(current.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

/// Number of monomials in `rank` variables with exponent sum `total`.
pub fn count_of_exponent_sum(rank: usize, total: i64) -> u128 {
    if total < 0 {
        return 0;
    }
    if rank == 0 {
        return u128::from(total == 0);
    }
    // binomial(total + rank - 1, rank - 1)
    let n = total as u128 + rank as u128 - 1;
    let k = (rank - 1) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_matches_binomial_count() {
        for rank in 0..4 {
            for total in 0..7 {
                let all = Monomial::all_of_exponent_sum(rank, total);
                assert_eq!(all.len() as u128, count_of_exponent_sum(rank, total as i64));
                assert!(all.iter().all(|m| m.exponent_sum() == total));
            }
        }
    }

    #[test]
    fn odd_or_negative_degree_is_empty() {
        assert!(Monomial::all_of_degree(2, 3).is_empty());
        assert!(Monomial::all_of_degree(2, -2).is_empty());
        assert_eq!(Monomial::all_of_degree(0, 0).len(), 1);
    }

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_exponents(vec![2, 1]);
        let b = Monomial::from_exponents(vec![1, 0]);
        assert!(b.divides(&a));
        assert_eq!(a.checked_div(&b), Some(Monomial::from_exponents(vec![1, 1])));
        assert_eq!(b.checked_div(&a), None);
        assert_eq!(a.lcm(&Monomial::from_exponents(vec![0, 3])).exponents(), &[2, 3]);
        assert_eq!(a.degree(), 6);
    }
}
