//! Exact arithmetic in `R = Q[t1..tr]` with every `ti` in degree 2.
//!
//! Degrees are always the internal (topological) degree: a monomial with
//! exponent sum `k` has degree `2k`. Nothing in the crate uses floating point.

mod division;
mod monomial;
mod order;
mod parse;
mod poly;

pub use division::{divide_with_remainder, Division};
pub use monomial::{count_of_exponent_sum, Monomial};
pub use order::{ModuleOrder, ModuleOrderKind, MonomialOrder};
pub use parse::{parse_poly, parse_rational};
pub use poly::{GradedPoly, PolyDegree};

/// Exact rational coefficients, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("polynomial ring rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("divisor {0} is zero")]
    ZeroDivisor(usize),
    #[error("cannot parse {input:?}: {message}")]
    Parse { input: String, message: String },
}

#[cfg(test)]
pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    /// Random homogeneous polynomial of exponent sum `k` in 3 variables.
    fn homogeneous(k: u32) -> impl Strategy<Value = GradedPoly> {
        let monos = Monomial::all_of_exponent_sum(3, k);
        let n = monos.len();
        prop::collection::vec((-4i64..=4, 1i64..=3), n).prop_map(move |coeffs| {
            GradedPoly::from_terms(
                3,
                monos
                    .iter()
                    .cloned()
                    .zip(coeffs)
                    .map(|(m, (a, b))| (m, Rational::new(a.into(), b.into()))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in homogeneous(1), b in homogeneous(2), c in homogeneous(2)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&b + &c, &c + &b);
        }

        #[test]
        fn homogeneity_is_preserved(a in homogeneous(1), b in homogeneous(2), c in homogeneous(2)) {
            let prod = &a * &b;
            prop_assert!(prod.degree().admits(6));
            prop_assert!((&b - &c).degree().admits(4));
        }

        #[test]
        fn division_reconstructs(p in homogeneous(3), d1 in homogeneous(1), d2 in homogeneous(2)) {
            prop_assume!(!d1.is_zero() && !d2.is_zero());
            let divs = [d1, d2];
            for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
                let d = divide_with_remainder(&p, &divs, order).unwrap();
                let back = d.quotients.iter().zip(&divs)
                    .fold(d.remainder.clone(), |acc, (q, f)| &acc + &(q * f));
                prop_assert_eq!(&back, &p);
                for (m, _) in d.remainder.terms() {
                    for f in &divs {
                        prop_assert!(!f.leading_term(order).unwrap().0.divides(m));
                    }
                }
            }
        }

        #[test]
        fn display_round_trips(p in homogeneous(2)) {
            prop_assert_eq!(parse_poly(&p.to_string(), 3).unwrap(), p);
        }
    }
}
