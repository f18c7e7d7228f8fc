use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{GradedPoly, Monomial, Rational, RingError};

/// Parses the fixture text form `c*t1^a1*...*tr^ar + ...`.
///
/// Coefficients are exact literals `p` or `p/q`; a term may omit its
/// coefficient or any exponent. Whitespace is ignored.
pub fn parse_poly(input: &str, rank: usize) -> Result<GradedPoly, RingError> {
    let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut parser = Parser {
        chars: &chars,
        pos: 0,
        rank,
        source: input,
    };
    let poly = parser.polynomial()?;
    if parser.pos != chars.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(poly)
}

pub fn parse_rational(input: &str) -> Result<Rational, RingError> {
    let chars: Vec<char> = input.trim().chars().collect();
    let mut parser = Parser {
        chars: &chars,
        pos: 0,
        rank: 0,
        source: input,
    };
    let negative = parser.eat('-');
    let mut r = parser.rational()?;
    if parser.pos != chars.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    if negative {
        r = -r;
    }
    Ok(r)
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
    rank: usize,
    source: &'a str,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> RingError {
        RingError::Parse {
            input: self.source.to_string(),
            message: format!("{msg} at offset {}", self.pos),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn polynomial(&mut self) -> Result<GradedPoly, RingError> {
        if self.chars.is_empty() {
            return Err(self.error("empty polynomial"));
        }
        let mut poly = GradedPoly::zero(self.rank);
        let mut first = true;
        loop {
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') {
                false
            } else if first {
                false
            } else {
                break;
            };
            first = false;
            let (m, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            poly.add_term(m, c);
            if self.peek().is_none() {
                break;
            }
        }
        Ok(poly)
    }

    fn term(&mut self) -> Result<(Monomial, Rational), RingError> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; self.rank];
        loop {
            match self.peek() {
                Some('t') => {
                    self.pos += 1;
                    let index = self.natural()?;
                    if index == 0 || index > self.rank as u64 {
                        return Err(self.error(&format!(
                            "variable t{index} outside t1..t{}",
                            self.rank
                        )));
                    }
                    let e = if self.eat('^') { self.natural()? } else { 1 };
                    let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
                    exps[index as usize - 1] += e;
                }
                Some(c) if c.is_ascii_digit() => {
                    coeff *= self.rational()?;
                }
                _ => return Err(self.error("expected a coefficient or a variable")),
            }
            if !self.eat('*') {
                break;
            }
        }
        Ok((Monomial::from_exponents(exps), coeff))
    }

    fn digits(&mut self) -> Result<&[char], RingError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(&self.chars[start..self.pos])
    }

    fn natural(&mut self) -> Result<u64, RingError> {
        let s: String = self.digits()?.iter().collect();
        s.parse().map_err(|_| self.error("integer too large"))
    }

    fn big(&mut self) -> Result<BigInt, RingError> {
        let s: String = self.digits()?.iter().collect();
        s.parse().map_err(|_| self.error("bad integer"))
    }

    fn rational(&mut self) -> Result<Rational, RingError> {
        let num = self.big()?;
        if self.eat('/') {
            let den = self.big()?;
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fixture_syntax() {
        let p = parse_poly("3/6*t1^2*t2 - t3 + 2", 3).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(
            p.coefficient(&Monomial::from_exponents(vec![2, 1, 0])),
            Rational::new(1.into(), 2.into())
        );
        assert_eq!(p.constant_term(), Rational::from_integer(2.into()));
    }

    #[test]
    fn repeated_variables_multiply() {
        let p = parse_poly("t1*t1^2", 1).unwrap();
        assert_eq!(p, GradedPoly::var(1, 0).pow(3));
    }

    #[test]
    fn cancellation_gives_zero() {
        assert!(parse_poly("t1 - t1", 2).unwrap().is_zero());
        assert!(parse_poly("0", 0).unwrap().is_zero());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_poly("t3", 2).is_err());
        assert!(parse_poly("t0", 2).is_err());
        assert!(parse_poly("", 2).is_err());
        assert!(parse_poly("1/0", 2).is_err());
        assert!(parse_poly("t1 +", 2).is_err());
        assert!(parse_poly("x", 2).is_err());
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("-4/6").unwrap(), Rational::new((-2).into(), 3.into()));
        assert!(parse_rational("1/").is_err());
    }
}
