//! Buchberger's algorithm for homogeneous submodules of graded free modules.
//!
//! Vectors are kept as sparse term lists sorted ascending under the module
//! order, so the leading term is the last entry and `f - c*m*g` is a merge.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use num_traits::{One, Zero};

use super::{FreeModule, ModuleError};
use crate::ring::{GradedPoly, ModuleOrder, ModuleOrderKind, Monomial, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Term {
    pub comp: usize,
    pub mono: Monomial,
}

pub(crate) type SVec = Vec<(Term, Rational)>;

#[derive(Clone, Debug)]
pub(crate) struct TermOrder {
    order: ModuleOrder,
    position_rank: Vec<usize>,
    degrees: Vec<i64>,
}

impl TermOrder {
    pub fn new(order: &ModuleOrder, free: &FreeModule) -> Self {
        let n = free.rank();
        let mut position_rank: Vec<usize> = (0..n).collect();
        if let Some(priority) = &order.priority {
            let mut seen = vec![false; n];
            let mut next = 0;
            for &c in priority {
                if c < n && !seen[c] {
                    seen[c] = true;
                    position_rank[c] = next;
                    next += 1;
                }
            }
            // unlisted positions rank below the listed ones, in index order
            for c in 0..n {
                if !seen[c] {
                    position_rank[c] = next;
                    next += 1;
                }
            }
        }
        TermOrder {
            order: order.clone(),
            position_rank,
            degrees: free.degrees().to_vec(),
        }
    }

    pub fn term_degree(&self, t: &Term) -> i64 {
        t.mono.degree() + self.degrees[t.comp]
    }

    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        let position = || self.position_rank[b.comp].cmp(&self.position_rank[a.comp]);
        match self.order.kind {
            ModuleOrderKind::PositionOverTerm => {
                position().then_with(|| self.order.monomial.cmp(&a.mono, &b.mono))
            }
            ModuleOrderKind::TermOverPosition => self
                .term_degree(a)
                .cmp(&self.term_degree(b))
                .then_with(|| self.order.monomial.cmp(&a.mono, &b.mono))
                .then_with(position),
        }
    }

    pub fn sparse(&self, v: &[GradedPoly]) -> SVec {
        let mut out: SVec = Vec::new();
        for (comp, p) in v.iter().enumerate() {
            for (m, c) in p.terms() {
                out.push((
                    Term {
                        comp,
                        mono: m.clone(),
                    },
                    c.clone(),
                ));
            }
        }
        out.sort_by(|a, b| self.cmp(&a.0, &b.0));
        out
    }

    /// `f - c * m * g`.
    pub fn sub_mul(&self, f: &[(Term, Rational)], c: &Rational, m: &Monomial, g: &[(Term, Rational)]) -> SVec {
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut fi = f.iter().peekable();
        let mut gi = g
            .iter()
            .map(|(t, a)| {
                (
                    Term {
                        comp: t.comp,
                        mono: t.mono.mul(m),
                    },
                    -(a * c),
                )
            })
            .peekable();
        loop {
            match (fi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(fi.next().unwrap().clone()),
                (None, Some(_)) => out.push(gi.next().unwrap()),
                (Some(a), Some(b)) => match self.cmp(&a.0, &b.0) {
                    Ordering::Less => out.push(fi.next().unwrap().clone()),
                    Ordering::Greater => out.push(gi.next().unwrap()),
                    Ordering::Equal => {
                        let (t, x) = fi.next().unwrap().clone();
                        let (_, y) = gi.next().unwrap();
                        let s = x + y;
                        if !s.is_zero() {
                            out.push((t, s));
                        }
                    }
                },
            }
        }
        out
    }
}

pub(crate) fn dense(v: &[(Term, Rational)], free: &FreeModule) -> Vec<GradedPoly> {
    let r = free.ring_rank();
    let mut out = vec![GradedPoly::zero(r); free.rank()];
    for (t, c) in v {
        out[t.comp].add_term(t.mono.clone(), c.clone());
    }
    out
}

fn make_monic(v: &mut SVec) {
    if let Some((_, lc)) = v.last() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in v.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// Incremental Buchberger state.
pub(crate) struct Buchberger {
    pub tord: TermOrder,
    pub basis: Vec<SVec>,
    pairs: BinaryHeap<Reverse<(i64, usize, usize)>>,
    pending: HashSet<(usize, usize)>,
}

impl Buchberger {
    pub fn new(tord: TermOrder) -> Self {
        Buchberger {
            tord,
            basis: Vec::new(),
            pairs: BinaryHeap::new(),
            pending: HashSet::new(),
        }
    }

    fn lead(&self, i: usize) -> &Term {
        &self.basis[i].last().expect("basis elements are nonzero").0
    }

    fn lcm_term(&self, i: usize, j: usize) -> Term {
        let (a, b) = (self.lead(i), self.lead(j));
        Term {
            comp: a.comp,
            mono: a.mono.lcm(&b.mono),
        }
    }

    fn find_reducer(&self, t: &Term) -> Option<(usize, Monomial)> {
        self.basis.iter().enumerate().find_map(|(i, g)| {
            let lt = &g.last().unwrap().0;
            if lt.comp == t.comp {
                t.mono.checked_div(&lt.mono).map(|q| (i, q))
            } else {
                None
            }
        })
    }

    /// Full reduction: no term of the result is divisible by a leading term.
    pub fn reduce(&self, mut f: SVec) -> SVec {
        let mut rem_desc: SVec = Vec::new();
        while let Some((t, c)) = f.last().cloned() {
            match self.find_reducer(&t) {
                Some((i, q)) => {
                    // basis elements are monic
                    f = self.tord.sub_mul(&f, &c, &q, &self.basis[i]);
                }
                None => {
                    f.pop();
                    rem_desc.push((t, c));
                }
            }
        }
        rem_desc.reverse();
        rem_desc
    }

    /// Adds a vector, reducing it first. Returns whether the basis grew.
    pub fn insert(&mut self, v: SVec) -> bool {
        let mut v = self.reduce(v);
        if v.is_empty() {
            return false;
        }
        make_monic(&mut v);
        self.push(v);
        true
    }

    fn push(&mut self, v: SVec) {
        let k = self.basis.len();
        self.basis.push(v);
        let comp = self.lead(k).comp;
        for i in 0..k {
            if self.lead(i).comp == comp {
                let lcm = self.lcm_term(i, k);
                let deg = self.tord.term_degree(&lcm);
                self.pairs.push(Reverse((deg, i, k)));
                self.pending.insert((i, k));
            }
        }
    }

    fn chain_criterion(&self, i: usize, j: usize, lcm: &Term) -> bool {
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        (0..self.basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let lt = self.lead(k);
            lt.comp == lcm.comp
                && lt.mono.divides(&lcm.mono)
                && !self.pending.contains(&key(i, k))
                && !self.pending.contains(&key(j, k))
        })
    }

    /// Processes critical pairs, stopping before pairs of degree above
    /// `max_degree` when one is given.
    pub fn run(&mut self, max_degree: Option<i64>) {
        while let Some(Reverse((deg, i, j))) = self.pairs.peek().copied() {
            if max_degree.is_some_and(|d| deg > d) {
                break;
            }
            self.pairs.pop();
            self.pending.remove(&(i, j));
            let lcm = self.lcm_term(i, j);
            if self.chain_criterion(i, j, &lcm) {
                continue;
            }
            let qi = lcm.mono.checked_div(&self.lead(i).mono).unwrap();
            let qj = lcm.mono.checked_div(&self.lead(j).mono).unwrap();
            let gi: SVec = self.basis[i]
                .iter()
                .map(|(t, c)| {
                    (
                        Term {
                            comp: t.comp,
                            mono: t.mono.mul(&qi),
                        },
                        c.clone(),
                    )
                })
                .collect();
            let s = self.tord.sub_mul(&gi, &Rational::one(), &qj, &self.basis[j]);
            self.insert(s);
        }
    }

    /// Minimal, tail-reduced basis sorted by leading term.
    pub fn into_reduced(self) -> Vec<SVec> {
        let tord = self.tord;
        let mut basis = self.basis;
        basis.sort_by(|a, b| tord.cmp(&a.last().unwrap().0, &b.last().unwrap().0));
        let mut keep: Vec<SVec> = Vec::new();
        for g in basis {
            let lt = &g.last().unwrap().0;
            let redundant = keep.iter().any(|h| {
                let lh = &h.last().unwrap().0;
                lh.comp == lt.comp && lh.mono.divides(&lt.mono)
            });
            if !redundant {
                keep.push(g);
            }
        }
        let mut reducer = Buchberger::new(tord);
        reducer.basis = keep;
        let n = reducer.basis.len();
        for k in 0..n {
            let mut g = std::mem::take(&mut reducer.basis[k]);
            let lead = g.pop().unwrap();
            // g's own slot is empty while its tail is reduced
            let others = Buchberger {
                tord: reducer.tord.clone(),
                basis: reducer.basis.iter().filter(|h| !h.is_empty()).cloned().collect(),
                pairs: BinaryHeap::new(),
                pending: HashSet::new(),
            };
            let mut tail = others.reduce(g);
            tail.push(lead);
            reducer.basis[k] = tail;
        }
        reducer.basis
    }
}

/// A reduced Gröbner basis of a homogeneous submodule of a free module.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    free: FreeModule,
    order: ModuleOrder,
    tord: TermOrder,
    elements: Vec<SVec>,
}

impl GroebnerBasis {
    /// Computes the reduced basis of the submodule spanned by `generators`
    /// (each a vector with one polynomial per generator of `free`).
    pub fn compute(
        free: &FreeModule,
        generators: &[Vec<GradedPoly>],
        order: &ModuleOrder,
    ) -> Result<Self, ModuleError> {
        let tord = TermOrder::new(order, free);
        let mut bb = Buchberger::new(tord.clone());
        for (index, g) in generators.iter().enumerate() {
            check_vector(free, g, index)?;
            bb.insert(tord.sparse(g));
        }
        bb.run(None);
        Ok(GroebnerBasis {
            free: free.clone(),
            order: order.clone(),
            tord,
            elements: bb.into_reduced(),
        })
    }

    pub fn free_module(&self) -> &FreeModule {
        &self.free
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> Vec<Vec<GradedPoly>> {
        self.elements.iter().map(|g| dense(g, &self.free)).collect()
    }

    /// `(position, monomial)` of each leading term.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elements
            .iter()
            .map(|g| {
                let t = &g.last().unwrap().0;
                (t.comp, t.mono.clone())
            })
            .collect()
    }

    pub(crate) fn term_order(&self) -> &TermOrder {
        &self.tord
    }

    fn reducer(&self) -> Buchberger {
        Buchberger {
            tord: self.tord.clone(),
            basis: self.elements.clone(),
            pairs: BinaryHeap::new(),
            pending: HashSet::new(),
        }
    }

    pub(crate) fn reduce_sparse(&self, v: SVec) -> SVec {
        self.reducer().reduce(v)
    }

    /// Normal form of `v` modulo the submodule.
    pub fn reduce(&self, v: &[GradedPoly]) -> Vec<GradedPoly> {
        dense(&self.reduce_sparse(self.tord.sparse(v)), &self.free)
    }

    pub fn contains(&self, v: &[GradedPoly]) -> bool {
        self.reduce_sparse(self.tord.sparse(v)).is_empty()
    }

    /// Whether the basis vector `e_comp` lies in the submodule.
    pub fn contains_generator(&self, comp: usize) -> bool {
        self.elements.iter().any(|g| {
            let t = &g.last().unwrap().0;
            t.comp == comp && t.mono.is_one()
        })
    }

    /// Terms `m * e_i` of degree `d` outside the leading-term module. Their
    /// classes form a basis of the degree-`d` piece of the quotient.
    pub fn standard_terms(&self, d: i64) -> Vec<(usize, Monomial)> {
        let r = self.free.ring_rank();
        let leads = self.leading_terms();
        let mut out = Vec::new();
        for (comp, &g) in self.free.degrees().iter().enumerate() {
            for m in Monomial::all_of_degree(r, d - g) {
                if !leads.iter().any(|(c, lm)| *c == comp && lm.divides(&m)) {
                    out.push((comp, m));
                }
            }
        }
        out
    }
}

pub(crate) fn check_vector(free: &FreeModule, v: &[GradedPoly], index: usize) -> Result<(), ModuleError> {
    if v.len() != free.rank() {
        return Err(ModuleError::Shape(format!(
            "vector {index} has {} entries, expected {}",
            v.len(),
            free.rank()
        )));
    }
    if v.iter().any(|p| p.rank() != free.ring_rank()) {
        return Err(ModuleError::RingRank {
            expected: free.ring_rank(),
            found: v.iter().map(GradedPoly::rank).find(|&r| r != free.ring_rank()).unwrap(),
        });
    }
    if v.iter().all(GradedPoly::is_zero) {
        return Ok(());
    }
    if free.vector_degree(v).is_none() {
        return Err(ModuleError::Inhomogeneous { index });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_poly, MonomialOrder};

    fn v(r: usize, entries: &[&str]) -> Vec<GradedPoly> {
        entries.iter().map(|s| parse_poly(s, r).unwrap()).collect()
    }

    fn pot() -> ModuleOrder {
        ModuleOrder::pot(MonomialOrder::GrevLex)
    }

    #[test]
    fn variables_are_already_a_basis() {
        let f = FreeModule::new(2, vec![0]);
        let gb = GroebnerBasis::compute(&f, &[v(2, &["t1"]), v(2, &["t2"])], &pot()).unwrap();
        assert_eq!(gb.len(), 2);
        let lts = gb.leading_terms();
        assert!(lts.contains(&(0, Monomial::var(2, 0))));
        assert!(lts.contains(&(0, Monomial::var(2, 1))));
    }

    #[test]
    fn hand_reduction_of_a_difference() {
        // (t1 - t2) and t2 reduce to the pair {t1, t2}
        let f = FreeModule::new(2, vec![0]);
        let gb = GroebnerBasis::compute(&f, &[v(2, &["t1-t2"]), v(2, &["t2"])], &pot()).unwrap();
        let els = gb.elements();
        assert_eq!(els.len(), 2);
        assert!(els.contains(&v(2, &["t1"])));
        assert!(els.contains(&v(2, &["t2"])));
    }

    #[test]
    fn empty_input_is_the_zero_submodule() {
        let f = FreeModule::new(2, vec![0, 2]);
        let gb = GroebnerBasis::compute(&f, &[], &pot()).unwrap();
        assert!(gb.is_empty());
        assert!(!gb.contains(&v(2, &["1", "0"])));
        assert!(gb.contains(&v(2, &["0", "0"])));
    }

    #[test]
    fn inhomogeneous_generators_are_rejected() {
        let f = FreeModule::new(2, vec![0]);
        let err = GroebnerBasis::compute(&f, &[v(2, &["t1+t2^2"])], &pot()).unwrap_err();
        assert!(matches!(err, ModuleError::Inhomogeneous { index: 0 }));
    }

    #[test]
    fn s_pairs_reduce_to_zero() {
        let f = FreeModule::new(3, vec![0, 0]);
        let gens = [v(3, &["t1", "t2"]), v(3, &["t2", "t3"]), v(3, &["t3", "t1"])];
        for order in [pot(), ModuleOrder::top(MonomialOrder::GrevLex), ModuleOrder::pot(MonomialOrder::Lex)] {
            let gb = GroebnerBasis::compute(&f, &gens, &order).unwrap();
            let els = gb.elements();
            let tord = gb.term_order().clone();
            for a in 0..els.len() {
                for b in 0..els.len() {
                    let (x, y) = (tord.sparse(&els[a]), tord.sparse(&els[b]));
                    let (lx, ly) = (&x.last().unwrap().0, &y.last().unwrap().0);
                    if lx.comp != ly.comp {
                        continue;
                    }
                    let l = lx.mono.lcm(&ly.mono);
                    let xs: SVec = x
                        .iter()
                        .map(|(t, c)| (Term { comp: t.comp, mono: t.mono.mul(&l.checked_div(&lx.mono).unwrap()) }, c.clone()))
                        .collect();
                    let s = tord.sub_mul(&xs, &Rational::one(), &l.checked_div(&ly.mono).unwrap(), &y);
                    assert!(gb.reduce_sparse(s).is_empty());
                }
            }
            for g in &gens {
                assert!(gb.contains(g));
            }
        }
    }

    #[test]
    fn recomputing_is_idempotent() {
        let f = FreeModule::new(2, vec![0, 2]);
        let gens = [v(2, &["t1^2", "t1"]), v(2, &["t1*t2", "t2"]), v(2, &["t2^2", "0"])];
        let gb = GroebnerBasis::compute(&f, &gens, &pot()).unwrap();
        let again = GroebnerBasis::compute(&f, &gb.elements(), &pot()).unwrap();
        assert_eq!(gb.elements(), again.elements());
    }

    #[test]
    fn priority_list_reorders_positions() {
        let f = FreeModule::new(1, vec![0, 0]);
        let order = pot().with_priority(vec![1, 0]);
        let gb = GroebnerBasis::compute(&f, &[v(1, &["1", "1"])], &order).unwrap();
        assert_eq!(gb.leading_terms(), vec![(1, Monomial::one(1))]);
    }

    #[test]
    fn standard_terms_count_quotient_dimension() {
        // R/(t1^2, t1*t2) over r = 2 in degree 4: t2^2 only
        let f = FreeModule::new(2, vec![0]);
        let gb = GroebnerBasis::compute(&f, &[v(2, &["t1^2"]), v(2, &["t1*t2"])], &pot()).unwrap();
        assert_eq!(gb.standard_terms(4).len(), 1);
        assert_eq!(gb.standard_terms(2).len(), 2);
        assert_eq!(gb.standard_terms(0).len(), 1);
    }
}
