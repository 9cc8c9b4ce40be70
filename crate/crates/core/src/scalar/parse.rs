//! Scalar text grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := int ['/' int] | name ['^' ['-'] int]
//! ```
//!
//! Whitespace is insignificant. Names must belong to the ring.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{LaurentPoly, Rational, Ring, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position} (ring is {ring})")]
    UnknownVariable {
        name: String,
        position: usize,
        ring: String,
    },
}

pub fn parse_scalar(text: &str, ring: &Ring) -> Result<Scalar, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(Scalar::from_poly(poly))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = LaurentPoly::zero(self.ring.clone());
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let mut t = self.term()?;
            if negative {
                t = t.neg();
            }
            acc = acc.add(&t).expect("same ring");
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut coeff = Rational::one();
        let mut exps = vec![0i32; self.ring.len()];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.integer()?;
                    let value = if self.eat(b'/') {
                        let den = self.integer()?;
                        if den.is_zero() {
                            return Err(self.error("zero denominator"));
                        }
                        Rational::new(num, den)
                    } else {
                        Rational::from_integer(num)
                    };
                    coeff *= value;
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = self.pos;
                    let name = self.identifier();
                    let index = self.ring.index_of(&name).ok_or_else(|| {
                        ParseError::UnknownVariable {
                            name: name.clone(),
                            position: start,
                            ring: self.ring.to_string(),
                        }
                    })?;
                    let power = if self.eat(b'^') { self.exponent()? } else { 1 };
                    exps[index] = exps[index]
                        .checked_add(power)
                        .ok_or_else(|| self.error("exponent overflow"))?;
                }
                Some(_) => return Err(self.error("expected a number or a variable")),
                None => return Err(self.error("unexpected end of input")),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        Ok(LaurentPoly::monomial(self.ring.clone(), exps, coeff))
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<i32, ParseError> {
        let negative = self.eat(b'-');
        if !negative {
            self.eat(b'+');
        }
        let value = self.integer()?;
        let value: i32 = value
            .try_into()
            .map_err(|_| self.error("exponent out of range"))?;
        Ok(if negative { -value } else { value })
    }

    fn identifier(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(vars: &[&str]) -> Ring {
        Ring::new(vars.iter().copied()).unwrap()
    }

    #[test]
    fn single_term_laurent() {
        let r = ring(&["a", "k"]);
        let s = parse_scalar("2*a^2*k^-1", &r).unwrap();
        match &s {
            Scalar::Laurent(p) => assert_eq!(p.num_terms(), 1),
            _ => panic!("expected a polynomial"),
        }
        assert_eq!(s.to_string(), "2*a^2*k^-1");
    }

    #[test]
    fn negative_fraction() {
        let s = parse_scalar("-1/2", &Ring::rationals()).unwrap();
        assert_eq!(s, Scalar::from_ratio(-1, 2));
        assert_eq!(s.to_string(), "-1/2");
    }

    #[test]
    fn normalizes_sums() {
        let r = ring(&["a"]);
        assert_eq!(parse_scalar("a + a", &r).unwrap().to_string(), "2*a");
        assert_eq!(parse_scalar(" a -a ", &r).unwrap(), Scalar::zero());
        assert_eq!(parse_scalar("2 * 3/4 * a", &r).unwrap().to_string(), "3/2*a");
    }

    #[test]
    fn canonical_order() {
        let r = ring(&["a", "b", "c", "d", "e"]);
        let s = parse_scalar("-b*d + c^2 - a*e + 1", &r).unwrap();
        assert_eq!(s.to_string(), "-a*e - b*d + c^2 + 1");
    }

    #[test]
    fn reports_positions() {
        let r = ring(&["a"]);
        assert_eq!(
            parse_scalar("a + * 2", &r),
            Err(ParseError::Syntax {
                position: 4,
                message: "expected a number or a variable".into()
            })
        );
        assert!(matches!(
            parse_scalar("a + z", &r),
            Err(ParseError::UnknownVariable { position: 4, .. })
        ));
        assert!(matches!(parse_scalar("1/0", &r), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_scalar("", &r), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_scalar("a b", &r), Err(ParseError::Syntax { .. })));
    }
}
