use std::collections::BTreeMap;
use std::fmt;

use crate::module::{FpModule, Resolution};
use crate::ring::count_of_exponent_sum;

/// `N(q) / (1 - q^2)^r` with an integer Laurent numerator; the exponent of
/// `q` is the internal degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    ring_rank: usize,
    numerator: BTreeMap<i64, i64>,
}

impl HilbertSeries {
    pub fn new(ring_rank: usize, numerator: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut hs = HilbertSeries {
            ring_rank,
            numerator: BTreeMap::new(),
        };
        for (e, c) in numerator {
            hs.add_term(e, c);
        }
        hs
    }

    fn add_term(&mut self, e: i64, c: i64) {
        let v = self.numerator.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.numerator.remove(&e);
        }
    }

    /// Alternating sum of generator degrees over a free resolution.
    pub fn from_resolution(res: &Resolution) -> Self {
        let r = res.module(0).ring_rank();
        let mut hs = HilbertSeries::new(r, []);
        for (k, f) in res.modules().iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            for &g in f.degrees() {
                hs.add_term(g, sign);
            }
        }
        hs
    }

    pub fn of(m: &FpModule) -> Self {
        Self::from_resolution(m.minimal_resolution())
    }

    pub fn ring_rank(&self) -> usize {
        self.ring_rank
    }

    /// Nonzero numerator coefficients keyed by exponent.
    pub fn numerator(&self) -> &BTreeMap<i64, i64> {
        &self.numerator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// `dim_Q M_d`.
    pub fn coefficient(&self, d: i64) -> i128 {
        let r = self.ring_rank;
        self.numerator
            .iter()
            .filter(|(&e, _)| e <= d && (d - e) % 2 == 0)
            .map(|(&e, &c)| c as i128 * count_of_exponent_sum(r, (d - e) / 2) as i128)
            .sum()
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let mut out = self.clone();
        for (&e, &c) in &other.numerator {
            out.add_term(e, c);
        }
        out
    }

    /// `M[l]` multiplies the series by `q^l`.
    pub fn shift(&self, l: i64) -> Self {
        HilbertSeries {
            ring_rank: self.ring_rank,
            numerator: self.numerator.iter().map(|(&e, &c)| (e + l, c)).collect(),
        }
    }

    /// Krull dimension: `r` minus the multiplicity of `1 - q^2` in the
    /// numerator. `None` for the zero module.
    pub fn dimension(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let lo = *self.numerator.keys().next().unwrap();
        let hi = *self.numerator.keys().next_back().unwrap();
        let mut coeffs: Vec<i64> = (lo..=hi).map(|e| self.numerator.get(&e).copied().unwrap_or(0)).collect();
        let mut k = 0;
        while k < self.ring_rank {
            match divide_by_one_minus_q2(&coeffs) {
                Some(q) => {
                    coeffs = q;
                    k += 1;
                }
                None => break,
            }
        }
        Some(self.ring_rank - k)
    }
}

/// Exact quotient by `1 - q^2` of a coefficient list, if there is one.
fn divide_by_one_minus_q2(n: &[i64]) -> Option<Vec<i64>> {
    if n.len() < 3 {
        return None;
    }
    // n_e = q_e - q_{e-2}
    let mut q = vec![0i64; n.len() - 2];
    for e in 0..q.len() {
        q[e] = n[e] + if e >= 2 { q[e - 2] } else { 0 };
    }
    let len = q.len();
    let ok = (len..n.len()).all(|e| n[e] == -(if e >= 2 && e - 2 < len { q[e - 2] } else { 0 }));
    ok.then_some(q)
}

impl fmt::Display for HilbertSeries {
    /// The numerator, highest power first, e.g. `q^4 - 2q^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator.is_empty() {
            return write!(f, "0");
        }
        for (k, (&e, &c)) in self.numerator.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
            let sep = if k > 0 { " " } else { "" };
            let gap = if k > 0 { " " } else { "" };
            let a = c.abs();
            let body = match (e, a) {
                (0, _) => a.to_string(),
                (_, 1) => format!("q^{e}"),
                _ => format!("{a}q^{e}"),
            };
            write!(f, "{sep}{sign}{gap}{body}")?;
        }
        Ok(())
    }
}
