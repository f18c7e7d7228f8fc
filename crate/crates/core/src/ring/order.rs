use std::cmp::Ordering;

use super::Monomial;

/// Term orders on monomials of `Q[t1..tr]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `t1 > t2 > ... > tr`.
    #[default]
    GrevLex,
    /// Pure lexicographic with `t1 > t2 > ... > tr`.
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        debug_assert_eq!(ea.len(), eb.len());
        match self {
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::GrevLex => a.exponent_sum().cmp(&b.exponent_sum()).then_with(|| {
                for (x, y) in ea.iter().zip(eb).rev() {
                    if x != y {
                        // smaller exponent in the last differing variable wins
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// How module terms `m * e_i` are compared.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ModuleOrderKind {
    /// Compare generator positions first, then monomials.
    #[default]
    PositionOverTerm,
    /// Compare total degree, then monomials, then generator positions.
    TermOverPosition,
}

/// A term order on a free module `F = ⊕ R e_i`.
///
/// Positions are ranked by `priority`: `priority[0]` is the most significant
/// generator. Without an explicit list, lower indices rank higher.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub monomial: MonomialOrder,
    pub kind: ModuleOrderKind,
    pub priority: Option<Vec<usize>>,
}

impl ModuleOrder {
    pub fn pot(monomial: MonomialOrder) -> Self {
        ModuleOrder {
            monomial,
            kind: ModuleOrderKind::PositionOverTerm,
            priority: None,
        }
    }

    pub fn top(monomial: MonomialOrder) -> Self {
        ModuleOrder {
            monomial,
            kind: ModuleOrderKind::TermOverPosition,
            priority: None,
        }
    }

    pub fn with_priority(mut self, priority: Vec<usize>) -> Self {
        self.priority = Some(priority);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        let o = MonomialOrder::GrevLex;
        // t1*t3 vs t2^2: same degree, t1*t3 has the larger last exponent
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 1, 0])), Ordering::Equal);
    }

    #[test]
    fn lex_prefers_first_variable() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn orders_are_multiplicative() {
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 2, 1]);
        let c = m(&[3, 1, 0]);
        for o in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
        }
    }
}
