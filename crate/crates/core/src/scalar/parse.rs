//! Text grammar for elements of GF(2)(t).
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := power (('*' | '/') power | power)*     juxtaposition multiplies
//! power  := atom ['^' ['-'] integer]
//! atom   := integer | 't' | '(' expr ')'
//! ```
//!
//! Integers are read modulo 2 and whitespace is ignored, so `1+t^2+t^3`,
//! `1/(1+t)` and `(t + t^2 + t^3) / (1 + t)` are all accepted.

use super::rational::RationalFunction;
use super::ScalarError;

pub fn parse_rational(input: &str) -> Result<RationalFunction, ScalarError> {
    let chars: Vec<(usize, char)> = input
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut parser = Parser { chars, pos: 0 };
    if parser.chars.is_empty() {
        return Err(parser.error("empty expression"));
    }
    let value = parser.expr()?;
    if parser.pos < parser.chars.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn error(&self, message: &str) -> ScalarError {
        let position = self
            .chars
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or_else(|| self.chars.last().map_or(0, |&(i, c)| i + c.len_utf8()));
        ScalarError::Parse {
            position,
            message: message.to_string(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction, ScalarError> {
        // negation is the identity in characteristic 2
        self.eat('-');
        let mut acc = self.term()?;
        while matches!(self.peek(), Some('+') | Some('-')) {
            self.pos += 1;
            acc = &acc + &self.term()?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction, ScalarError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.power()?;
                    acc = acc.div(&d).map_err(|_| {
                        self.pos = at;
                        self.error("division by zero")
                    })?;
                }
                Some('(') | Some('t') => acc = &acc * &self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RationalFunction, ScalarError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let e = self.integer()?;
        let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
        let value = base.pow(e);
        if negative {
            value.inv().map_err(|_| self.error("division by zero"))
        } else {
            Ok(value)
        }
    }

    fn atom(&mut self) -> Result<RationalFunction, ScalarError> {
        match self.peek() {
            Some('t') => {
                self.pos += 1;
                Ok(RationalFunction::t())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalFunction::from_bool(n % 2 == 1))
            }
            Some(_) => Err(self.error("expected 't', an integer or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<u64, ScalarError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        digits.parse().map_err(|_| {
            self.pos = start;
            self.error("integer too large")
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gf2Poly;

    #[test]
    fn accepts_example_forms() {
        let a = parse_rational("(t+t^2+t^3)/(1+t)").unwrap();
        assert_eq!(a.numerator(), &Gf2Poly::from_exponents(&[1, 2, 3]));
        assert_eq!(a.denominator(), &Gf2Poly::from_exponents(&[0, 1]));
        assert_eq!(
            parse_rational("1+t^2+t^3").unwrap(),
            Gf2Poly::from_exponents(&[0, 2, 3]).into()
        );
        assert_eq!(
            parse_rational("1/(1+t)").unwrap(),
            parse_rational("(1+t)^-1").unwrap()
        );
        assert_eq!(
            parse_rational(" ( t + t ^ 2 ) / ( 1 + t ) ").unwrap(),
            RationalFunction::t()
        );
    }

    #[test]
    fn juxtaposition_and_integers() {
        assert_eq!(
            parse_rational("(1+t)(1+t)").unwrap(),
            parse_rational("1+t^2").unwrap()
        );
        assert_eq!(parse_rational("2").unwrap(), RationalFunction::zero());
        assert_eq!(parse_rational("3t").unwrap(), RationalFunction::t());
        assert_eq!(parse_rational("-t").unwrap(), RationalFunction::t());
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "x", "1+", "(1+t", "1/0", "t^", "t^99999999999", "1)"] {
            assert!(
                matches!(parse_rational(bad), Err(ScalarError::Parse { .. })),
                "{bad:?} should not parse"
            );
        }
    }
}
