use super::{GradedPoly, MonomialOrder, RingError};

/// Result of multivariate division: `p = Σ quotients[i]·divisors[i] + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<GradedPoly>,
    pub remainder: GradedPoly,
}

/// Multivariate division with remainder.
///
/// No monomial of the remainder is divisible by the leading monomial of any
/// divisor. Divisors are tried in the order given.
pub fn divide_with_remainder(
    p: &GradedPoly,
    divisors: &[GradedPoly],
    order: MonomialOrder,
) -> Result<Division, RingError> {
    let rank = p.rank();
    let mut leads = Vec::with_capacity(divisors.len());
    for (i, d) in divisors.iter().enumerate() {
        if d.rank() != rank {
            return Err(RingError::RankMismatch {
                left: rank,
                right: d.rank(),
            });
        }
        let (m, c) = d.leading_term(order).ok_or(RingError::ZeroDivisor(i))?;
        leads.push((m.clone(), c.clone()));
    }

    let mut quotients = vec![GradedPoly::zero(rank); divisors.len()];
    let mut remainder = GradedPoly::zero(rank);
    let mut rest = p.clone();
    while let Some((m, c)) = rest.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(i, (lm, lc))| m.checked_div(lm).map(|q| (i, q, &c / lc)));
        match hit {
            Some((i, q, coeff)) => {
                let step = divisors[i].mul_monomial(&q).scale(&coeff);
                rest = &rest - &step;
                quotients[i].add_term(q, coeff);
            }
            None => {
                rest.add_term(m.clone(), -c.clone());
                remainder.add_term(m, c);
            }
        }
    }
    Ok(Division {
        quotients,
        remainder,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    fn p(s: &str) -> GradedPoly {
        parse_poly(s, 2).unwrap()
    }

    fn reconstruct(div: &Division, divisors: &[GradedPoly]) -> GradedPoly {
        div.quotients
            .iter()
            .zip(divisors)
            .fold(div.remainder.clone(), |acc, (q, d)| &acc + &(q * d))
    }

    #[test]
    fn exact_single_division() {
        let divs = [p("t1")];
        let d = divide_with_remainder(&p("t1^2"), &divs, MonomialOrder::GrevLex).unwrap();
        assert_eq!(d.quotients, vec![p("t1")]);
        assert!(d.remainder.is_zero());
    }

    #[test]
    fn remainder_keeps_undivisible_terms() {
        let divs = [p("t1")];
        let d = divide_with_remainder(&p("t1*t2+t2^2"), &divs, MonomialOrder::GrevLex).unwrap();
        assert_eq!(d.remainder, p("t2^2"));
        assert_eq!(d.quotients, vec![p("t2")]);
    }

    #[test]
    fn difference_of_squares() {
        let divs = [p("t1-t2")];
        let target = p("t1^2-t2^2");
        let d = divide_with_remainder(&target, &divs, MonomialOrder::GrevLex).unwrap();
        assert!(d.remainder.is_zero());
        assert_eq!(d.quotients, vec![p("t1+t2")]);
        // independent check: substituting t1 = t2 makes the dividend vanish,
        // and the cofactor times the divisor gives back the dividend
        assert_eq!(&d.quotients[0] * &divs[0], target);
    }

    #[test]
    fn zero_divisor_is_rejected() {
        let r = divide_with_remainder(&p("t1"), &[GradedPoly::zero(2)], MonomialOrder::GrevLex);
        assert!(matches!(r, Err(RingError::ZeroDivisor(0))));
    }

    #[test]
    fn reconstruction_with_several_divisors() {
        let divs = [p("t1^2-t2^2"), p("t1*t2+t2^2")];
        let target = p("t1^3+t1^2*t2-4*t2^3");
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let d = divide_with_remainder(&target, &divs, order).unwrap();
            assert_eq!(reconstruct(&d, &divs), target);
        }
    }
}
