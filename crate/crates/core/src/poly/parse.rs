//! Surface syntax for polynomials: identifiers, `+ - * ^`, rational
//! literals `p/q`, parentheses. Multiplication is explicit and exponents
//! are nonnegative integers.

use super::{MultiPoly, PolyRing};
use num::{BigInt, BigRational, One, Zero};
use std::str::FromStr;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct PolyParseError {
    pub pos: usize,
    pub msg: String,
}

pub fn parse_polynomial(ring: &Arc<PolyRing>, text: &str) -> Result<MultiPoly, PolyParseError> {
    let mut p = Parser {
        ring,
        text: text.as_bytes(),
        pos: 0,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> PolyParseError {
        PolyParseError {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyParseError> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, PolyParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyParseError> {
        let base = self.primary()?;
        if self.eat(b'^') {
            if self.peek() == Some(b'-') {
                return Err(self.err("negative exponents are not allowed"));
            }
            let e = self.natural()?;
            let mut acc = MultiPoly::one(base.ring());
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<MultiPoly, PolyParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                Ok(MultiPoly::constant(self.ring, r))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                let name = self.identifier();
                match self.ring.var_index(&name) {
                    Some(i) => Ok(MultiPoly::var(self.ring, i)),
                    None => Err(PolyParseError {
                        pos: start,
                        msg: format!("unknown variable `{name}`"),
                    }),
                }
            }
            _ => Err(self.err("expected a number, variable, or `(`")),
        }
    }

    fn identifier(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.text.len()
            && (self.text[self.pos].is_ascii_alphanumeric() || self.text[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.text[start..self.pos]).into_owned()
    }

    fn natural(&mut self) -> Result<u32, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an exponent"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| PolyParseError {
                pos: start,
                msg: "exponent too large".into(),
            })
    }

    fn rational(&mut self) -> Result<BigRational, PolyParseError> {
        let num = self.integer()?;
        if self.pos < self.text.len() && self.text[self.pos] == b'/' {
            self.pos += 1;
            let dstart = self.pos;
            let den = self.integer()?;
            if den.is_zero() {
                return Err(PolyParseError {
                    pos: dstart,
                    msg: "zero denominator".into(),
                });
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::new(num, BigInt::one()))
    }

    fn integer(&mut self) -> Result<BigInt, PolyParseError> {
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(BigInt::from_str(std::str::from_utf8(&self.text[start..self.pos]).unwrap()).unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_forms() {
        let r = PolyRing::degrevlex(&["x", "y", "z"]);
        assert_eq!(
            parse_polynomial(&r, "x*y - 2").unwrap().to_string(),
            "x*y - 2"
        );
        assert_eq!(
            parse_polynomial(&r, "3/2*x^2*y - z + 1").unwrap().to_string(),
            "3/2*x^2*y - z + 1"
        );
        assert_eq!(
            parse_polynomial(&r, "(x + y)^2").unwrap(),
            parse_polynomial(&r, "x^2 + 2*x*y + y^2").unwrap()
        );
    }

    #[test]
    fn z_squared_plus_one() {
        let r = PolyRing::degrevlex(&["z"]);
        let f = parse_polynomial(&r, "z^2+1").unwrap();
        assert_eq!(f.to_string(), "z^2 + 1");
    }

    #[test]
    fn rejects_negative_exponent() {
        let r = PolyRing::degrevlex(&["x"]);
        let e = parse_polynomial(&r, "x^-1").unwrap_err();
        assert!(e.msg.contains("negative exponent"));
    }

    #[test]
    fn rejects_unknown_variable_with_position() {
        let r = PolyRing::degrevlex(&["x"]);
        let e = parse_polynomial(&r, "x + q").unwrap_err();
        assert_eq!(e.pos, 4);
    }

    #[test]
    fn rejects_implicit_multiplication() {
        let r = PolyRing::degrevlex(&["x"]);
        assert!(parse_polynomial(&r, "2x").is_err());
    }

    #[test]
    fn rejects_zero_denominator() {
        let r = PolyRing::degrevlex(&["x"]);
        assert!(parse_polynomial(&r, "1/0").is_err());
    }
}
